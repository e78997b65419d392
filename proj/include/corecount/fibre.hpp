#pragma once

#include <cstdint>
#include <vector>

#include "corecount/multiset.hpp"
#include "corecount/numeric.hpp"
#include "corecount/partition.hpp"
#include "corecount/polynomial.hpp"

namespace corecount {

// Count m-cores (m = lcm(s,t)) of bounded length whose s-core is sigma and
// t-core is tau.
struct FibreProblem {
    std::int64_t s = 1;
    std::int64_t t = 1;
    Partition sigma;
    Partition tau;

    FibreProblem(std::int64_t s, std::int64_t t, Partition sigma, Partition tau);

    std::int64_t d() const;   // gcd(s, t)
    std::int64_t m() const;   // lcm(s, t)
    std::int64_t ell0() const;
    // Fibres are empty unless the d-cores of sigma and tau agree.
    bool compatible() const;
};

struct FactoredPiece {
    Partition sigma;  // an (s/d)-core
    Partition tau;    // a (t/d)-core
    std::int64_t ell = 0;
};

// The d coprime sub-problems a fibre count factors into at anchor index i;
// the piece cardinalities sum to i.
struct FactoredProblem {
    std::int64_t anchor = 0;
    std::vector<FactoredPiece> pieces;
};

inline constexpr std::int64_t kDefaultBruteCap = 5'000'000;

// Enumerates every m-core of length <= k and tests its s- and t-cores
// directly. Requires C(k+m-1, k) <= cap (guard_error otherwise).
Int count_brute(const FibreProblem& p, std::int64_t k, std::int64_t cap = kDefaultBruteCap);

// Backtracking variant of count_brute: enumerates the same m-cores but
// abandons prefixes whose residue counts already overshoot the target s- or
// t-multisets. Each accepted core is still verified through the partition
// machinery. cap bounds the number of search nodes visited.
Int count_brute_pruned(const FibreProblem& p, std::int64_t k,
                       std::int64_t cap = kDefaultBruteCap);

// Margins of the matching problem equivalent to counting the fibre at
// argument i + s*t*k, for coprime s, t and anchor i >= ell0:
//   rows[j] = H^i_{sigma,s}(j) + k*t,  cols[j] = H^i_{tau,t}(j) + k*s.
MarginPair margins_coprime(const FibreProblem& p, std::int64_t i, std::int64_t k);

// Exact fibre count via count_matchings for coprime s, t and k >= ell0.
Int count_coprime(const FibreProblem& p, std::int64_t k);

// Split the fibre problem at anchor i >= ell0 into d coprime pieces by
// restricting the bead multisets to residue classes mod d. Requires
// compatible d-cores (the count is identically zero otherwise).
FactoredProblem factor_noncoprime(const FibreProblem& p, std::int64_t i);

// Exact fibre count for any s, t and k >= ell0: zero on incompatible d-cores,
// otherwise the product of the piece counts.
Int count_general(const FibreProblem& p, std::int64_t k);

// Number of a-cores of length <= k with b-core sigma (b | a), by the closed
// form: the product over residues j of multichoose(a/b, H^k_{sigma,b}(j)).
// Requires k >= length(sigma).
Int divisor_fibre_count(std::int64_t a, std::int64_t b, const Partition& sigma, std::int64_t k);

// The same count as a quasipolynomial of period b and degree a-b, exact for
// arguments >= length(sigma); every branch has leading coefficient
// 1/((a/b-1)!)^b.
Quasipolynomial divisor_quasipoly(std::int64_t a, std::int64_t b, const Partition& sigma);

}  // namespace corecount
