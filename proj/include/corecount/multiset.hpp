#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "corecount/numeric.hpp"
#include "corecount/partition.hpp"

namespace corecount {

// Multiset on the index set {0,...,n-1}, as a dense count vector.
class FiniteMultiset {
public:
    FiniteMultiset() = default;
    explicit FiniteMultiset(std::vector<std::int64_t> counts);
    FiniteMultiset(const ResidueMultiset& r) : counts_(r.counts()) {}

    std::int64_t index_size() const { return static_cast<std::int64_t>(counts_.size()); }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t count(std::int64_t i) const { return counts_[i]; }
    std::int64_t cardinality() const;

    friend bool operator==(const FiniteMultiset&, const FiniteMultiset&) = default;

private:
    std::vector<std::int64_t> counts_;
};

// f_*(F)(t) = sum of F over the fibre of f above t. map[i] is the image of
// index i; every map[i] must lie in [0, target_size).
FiniteMultiset pushforward(const FiniteMultiset& f, std::span<const std::int64_t> map,
                           std::int64_t target_size);

// Number of multisets pushing forward to g when the fibre above index j has
// fibre_sizes[j] elements: the product of multichoose(fibre_sizes[j], g(j)).
Int fibre_cardinality(const FiniteMultiset& g, std::span<const std::int64_t> fibre_sizes);

// Row and column margins of a contingency-table counting problem.
struct MarginPair {
    std::vector<std::int64_t> rows;
    std::vector<std::int64_t> cols;

    bool balanced() const;
    friend bool operator==(const MarginPair&, const MarginPair&) = default;
};

// Nonnegative integer matrix; a matching between two multisets when its
// margins equal theirs.
struct Matching {
    std::vector<std::vector<std::int64_t>> entries;

    std::vector<std::int64_t> row_sums() const;
    std::vector<std::int64_t> col_sums() const;
    friend bool operator==(const Matching&, const Matching&) = default;
};

// M_{F,G}: the number of nonnegative integer matrices with the given margins.
// Requires balanced margins; the count is then at least 1.
Int count_matchings(const MarginPair& m);

// All matrices with the given margins, in lexicographic row-major order.
// Throws guard_error once more than cap matrices have been produced.
std::vector<Matching> enumerate_matchings(const MarginPair& m, std::int64_t cap);

// Split a multiset on Z/s by residue class mod a divisor d of s: result j is
// supported on indices congruent to j, reindexed to size s/d via
// result[j](a) = f(j + a*d).
std::vector<FiniteMultiset> restrict_to_classes(const FiniteMultiset& f, std::int64_t d);

}  // namespace corecount
