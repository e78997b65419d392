#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "corecount/multiset.hpp"
#include "corecount/numeric.hpp"

namespace corecount {

// Dense integer matrix, row major.
struct IntMatrix {
    std::vector<std::vector<std::int64_t>> rows;

    IntMatrix() = default;
    IntMatrix(std::initializer_list<std::vector<std::int64_t>> r) : rows(r) {}

    std::int64_t row_count() const { return static_cast<std::int64_t>(rows.size()); }
    std::int64_t col_count() const {
        return rows.empty() ? 0 : static_cast<std::int64_t>(rows.front().size());
    }
    std::int64_t at(std::int64_t i, std::int64_t j) const { return rows[i][j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// The polyhedron P(A, b) = { x : Ax <= b, x >= 0 }.
struct ConstraintSystem {
    IntMatrix A;
    std::vector<std::int64_t> b;
};

// The family P(A, b*k + c) for integer parameter k >= 0.
struct ParametricSystem {
    IntMatrix A;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> c;

    ConstraintSystem at(std::int64_t k) const;
};

// Transportation margins: nonnegative row/column sums with equal totals.
struct TransportationSpec {
    std::vector<std::int64_t> rows;
    std::vector<std::int64_t> cols;
};

// True iff every square submatrix of A has determinant -1, 0 or +1.
// Exhaustive minor check; throws guard_error when min(m, n) exceeds 12.
bool is_totally_unimodular(const IntMatrix& A);

// Exact rational feasibility of { Ax <= b, x >= 0 }, by Fourier-Motzkin.
bool is_empty(const ConstraintSystem& sys);

// True iff the characteristic cone { y >= 0 : Ay <= 0 } is trivial (or the
// polyhedron is empty). Boundedness does not depend on b.
bool is_bounded(const ConstraintSystem& sys);
bool has_trivial_recession_cone(const IntMatrix& A);

// The set of integer parameters k >= 0 at which P(A, b*k + c) is nonempty.
// Fourier-Motzkin with a degree-1 right-hand side shows this set is the
// integer points of an interval.
struct FeasibleWindow {
    bool empty_for_all = false;   // infeasible at every k >= 0
    std::int64_t lo = 0;          // first feasible k, when !empty_for_all
    std::optional<std::int64_t> hi;  // last feasible k; unbounded when absent

    bool feasible_at(std::int64_t k) const {
        return !empty_for_all && k >= lo && (!hi || k <= *hi);
    }
    bool eventually_feasible() const { return !empty_for_all && !hi; }
};
FeasibleWindow parametric_feasible_window(const ParametricSystem& ps);

// All nonnegative integer solutions of Ax <= b, in lexicographically
// increasing order. Requires a bounded system; throws guard_error beyond cap.
std::vector<std::vector<std::int64_t>> lattice_points(const ConstraintSystem& sys,
                                                      std::int64_t cap = 50'000'000);
// Same enumeration, counting only.
Int lattice_point_count(const ConstraintSystem& sys);

// The projection of the transportation polytope obtained by dropping the last
// row and column: (s+t-1) constraints on the (s-1)(t-1) remaining entries
// (row sums <= r_i, column sums <= c_j, and total >= margin excess). Its
// integer points biject with the matchings for the given margins.
ConstraintSystem transportation_projected(const TransportationSpec& spec);

// Inverse of the projection: rebuild the full s x t matrix from the
// (s-1)(t-1) projected entries, last row/column forced by the margins.
// Throws std::invalid_argument if any forced entry is negative.
Matching lift_point(const TransportationSpec& spec, std::span<const std::int64_t> x);

}  // namespace corecount
