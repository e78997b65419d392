#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "corecount/numeric.hpp"

namespace corecount {

// Weakly decreasing sequence of positive integers; the empty partition is
// allowed. Text form is "5,4,3,1", with "-" for the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);
    static Partition parse(std::string_view text);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }
    std::int64_t size() const;
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
// significant: length counts them.
class Pseudopartition {
public:
    Pseudopartition() = default;
    explicit Pseudopartition(std::vector<std::int64_t> parts);
    Pseudopartition(const Partition& p) : parts_(p.parts()) {}

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }
    std::string str() const;

    friend bool operator==(const Pseudopartition&, const Pseudopartition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

// The map z: append one trailing zero.
Pseudopartition with_trailing_zero(const Pseudopartition& p);
// The map u^k: append trailing zeros until length k. Requires k >= length.
Pseudopartition padded_to(const Pseudopartition& p, std::int64_t k);
// The retraction r: strip all trailing zeros.
Partition strip_trailing_zeros(const Pseudopartition& p);

// Finite set of distinct nonnegative integers, stored strictly decreasing.
// For a partition this is the set of first-column hooklengths.
class BetaSet {
public:
    BetaSet() = default;
    static BetaSet of(std::vector<std::int64_t> elements);

    // Strictly decreasing.
    const std::vector<std::int64_t>& elements() const { return elems_; }
    std::int64_t cardinality() const { return static_cast<std::int64_t>(elems_.size()); }
    bool contains(std::int64_t x) const;
    std::string str() const;

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<std::int64_t> elems_;
};

// Multiset on Z/tZ with a dense count vector indexed by residue.
class ResidueMultiset {
public:
    ResidueMultiset(std::int64_t modulus, std::vector<std::int64_t> counts);
    static ResidueMultiset zeros(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t count(std::int64_t residue) const { return counts_[residue]; }
    std::int64_t cardinality() const;

    friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;

private:
    std::int64_t modulus_ = 1;
    std::vector<std::int64_t> counts_;
};

// beta((a_1,...,a_l)) = {a_i + (l - i)}.
BetaSet beta(const Pseudopartition& p);
// Inverse of beta: sort descending as h_1 > ... > h_l, return (h_i - (l - i)).
Pseudopartition beta_inv(const BetaSet& x);
// The map Z: increment every element, adjoin 0.
BetaSet add_trailing_zero(const BetaSet& x);
// The map U^k: apply Z until cardinality k. Requires k >= |x|.
BetaSet pad_to(const BetaSet& x, std::int64_t k);
// The retraction R: if 0 is present, remove {0,...,m-1} for m the least
// absent value and subtract m from the rest; otherwise the identity.
BetaSet reduce(const BetaSet& x);
// rho_t: count elements by residue mod t.
ResidueMultiset residues(const BetaSet& x, std::int64_t t);
// The minimal section c_t of rho_t: residue i with multiplicity n contributes
// {i, t+i, ..., (n-1)t+i}. The result is t-reduced and residues() inverts it.
BetaSet abacus_normal_form(const ResidueMultiset& f);

// True iff the Young diagram of p contains a t-hook, i.e. some x in beta(p)
// has x >= t and x - t not in beta(p).
bool has_hook(const Partition& p, std::int64_t t);
// The t-core: beta_inv(R(c_t(rho_t(beta(p))))).
Partition core(const Partition& p, std::int64_t t);
// H^k_{p,t} = rho_t(U^k(beta(p))). Requires k >= length(p).
ResidueMultiset core_multiset(const Partition& p, std::int64_t t, std::int64_t k);
// Inverse of the bijection taking a t-core of length <= k to its k-bead
// residue multiset: strip_trailing_zeros(beta_inv(c_t(f))).
Partition multiset_to_core(const ResidueMultiset& f);

// Every count vector of length t summing to k, lexicographically increasing.
void for_each_multiset(std::int64_t t, std::int64_t k,
                       const std::function<void(const std::vector<std::int64_t>&)>& fn);

// All t-cores of length <= k; exactly C(k+t-1, k) of them, no duplicates.
std::vector<Partition> enumerate_cores(std::int64_t t, std::int64_t k);

}  // namespace corecount
