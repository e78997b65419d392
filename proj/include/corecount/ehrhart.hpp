#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "corecount/fibre.hpp"
#include "corecount/numeric.hpp"
#include "corecount/polynomial.hpp"
#include "corecount/polytope.hpp"

namespace corecount {

// Result of counting N(A, b*k + c): a polynomial exact for k >= threshold,
// together with the range of k on which it was checked against an
// independent count.
struct ParametricCount {
    ExactPolynomial poly;
    std::int64_t threshold = 0;
    std::int64_t certified_lo = 0;
    std::int64_t certified_hi = -1;
};

using CountOracle = std::function<Int(std::int64_t)>;

// The exact polynomial agreeing with the number of integer points of
// P(A, b*k + c) for all large k. Requires A totally unimodular and the family
// bounded. The computation slices away one offset at a time, eliminating a
// pivot variable per slice, and bottoms out in interval counts and scaling
// interpolation. The returned threshold is the smallest k0 at which the
// polynomial matched n+3 consecutive independent counts (direct lattice
// enumeration unless an oracle is supplied); certification failure up to
// k0 = 64 raises guard_error.
ParametricCount count_parametric(const ParametricSystem& ps, const CountOracle& oracle = {});

// Options controlling the assembly of fibre quasipolynomials.
struct FibreQuasipolyOptions {
    // Re-check every branch against the backtracking core enumerator on its
    // certified range.
    bool validate_brute = true;
    std::int64_t brute_cap = 50'000'000;
};

// The quasipolynomial of period m = lcm(s,t) counting the fibre of the
// (s,t)-core map by bounded length: branch at residue i comes from the
// parametric transportation system of the anchored margins (product of the d
// factored pieces when s, t are not coprime). Identically zero when the
// d-cores of sigma and tau differ.
Quasipolynomial fibre_quasipolynomial(const FibreProblem& p, const FibreQuasipolyOptions& opts = {});

// Leading coefficient of the parametric count for the projected
// transportation system with the given slope margins: the relative volume of
// the transportation polytope.
Rat relative_volume(const TransportationSpec& spec);

struct VolumeReport {
    std::int64_t s = 1;
    std::int64_t t = 1;
    Rat volume;
    std::int64_t dimension = 0;
};

// V_{s,t}: the relative volume for uniform margins (t,...,t) / (s,...,s).
VolumeReport uniform_volume(std::int64_t s, std::int64_t t);

// Quasipolynomial counting fibres by exact length: the difference
// N(n) - N(n-1), of strictly smaller degree.
Quasipolynomial exact_length_quasipoly(const FibreProblem& p, const FibreQuasipolyOptions& opts = {});

struct VerifyReport {
    bool ok = true;
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::int64_t first_mismatch = 0;
    Int expected;
    Int got;
};

// Compare q against the oracle on every argument in [lo, hi]; the first
// disagreement (if any) is reported, not thrown.
VerifyReport verify_quasipoly(const Quasipolynomial& q, const CountOracle& oracle,
                              std::int64_t lo, std::int64_t hi);

}  // namespace corecount
