#include "corecount/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace corecount {

ConstraintSystem ParametricSystem::at(std::int64_t k) const {
    ConstraintSystem sys;
    sys.A = A;
    sys.b.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) sys.b[i] = b[i] * k + c[i];
    return sys;
}

namespace {

void check_dims(const IntMatrix& A, std::size_t m) {
    for (const auto& row : A.rows)
        if (row.size() != A.rows.front().size())
            throw std::invalid_argument("ragged constraint matrix");
    if (A.rows.size() != m) throw std::invalid_argument("matrix/vector dimension mismatch");
}

// ---- Fourier-Motzkin over Q with right-hand sides linear in the parameter k.

struct FmRhs {
    Rat slope;
    Rat offset;
};

struct FmRow {
    std::vector<Rat> a;
    FmRhs rhs;
};

using FmSystem = std::vector<FmRow>;

constexpr std::size_t kFmRowLimit = 200'000;

// Scale by a positive rational so the coefficient vector is a primitive
// integer vector, then drop rows whose right-hand side is dominated by
// another row with the same coefficients (pointwise looser for all k >= 0).
void fm_prune(FmSystem& sys) {
    for (auto& row : sys) {
        Int l = 1;
        for (const auto& v : row.a) l = lcm(l, v.get_den());
        Int g = 0;
        for (const auto& v : row.a) g = gcd(g, v.get_num() * (l / v.get_den()));
        if (g == 0) continue;  // zero coefficient row: leave as is
        Rat scale = make_rat(l, g);
        for (auto& v : row.a) v *= scale;
        row.rhs.slope *= scale;
        row.rhs.offset *= scale;
    }
    std::map<std::vector<Rat>, std::vector<FmRhs>> groups;
    for (auto& row : sys) groups[row.a].push_back(row.rhs);
    FmSystem out;
    for (auto& [coeffs, rhss] : groups) {
        // Keep the Pareto-minimal right-hand sides under (slope, offset).
        std::vector<FmRhs> kept;
        for (const auto& r : rhss) {
            bool dominated = false;
            for (const auto& k : kept)
                if (k.slope <= r.slope && k.offset <= r.offset) { dominated = true; break; }
            if (dominated) continue;
            std::erase_if(kept, [&](const FmRhs& k) {
                return r.slope <= k.slope && r.offset <= k.offset;
            });
            kept.push_back(r);
        }
        for (auto& r : kept) out.push_back(FmRow{coeffs, r});
    }
    sys = std::move(out);
}

// Eliminate variable `var`; feasibility at each k >= 0 is preserved.
FmSystem fm_eliminate(const FmSystem& sys, std::size_t var) {
    FmSystem out;
    std::vector<const FmRow*> pos, neg;
    for (const auto& row : sys) {
        if (row.a[var] > 0) pos.push_back(&row);
        else if (row.a[var] < 0) neg.push_back(&row);
        else out.push_back(row);
    }
    for (const FmRow* up : pos) {
        for (const FmRow* lo : neg) {
            Rat cu = up->a[var], cl = -lo->a[var];
            FmRow row;
            row.a.resize(sys.front().a.size(), Rat(0));
            for (std::size_t j = 0; j < row.a.size(); ++j)
                row.a[j] = up->a[j] / cu + lo->a[j] / cl;
            row.a[var] = 0;
            row.rhs.slope = up->rhs.slope / cu + lo->rhs.slope / cl;
            row.rhs.offset = up->rhs.offset / cu + lo->rhs.offset / cl;
            out.push_back(std::move(row));
            if (out.size() > kFmRowLimit) throw guard_error("fourier-motzkin row blowup");
        }
    }
    fm_prune(out);
    return out;
}

FmSystem fm_build(const IntMatrix& A, std::span<const std::int64_t> slope,
                  std::span<const std::int64_t> offset, bool with_nonneg) {
    const std::int64_t n = A.col_count();
    FmSystem sys;
    for (std::int64_t i = 0; i < A.row_count(); ++i) {
        FmRow row;
        row.a.assign(A.rows[i].begin(), A.rows[i].end());
        row.rhs.slope = slope.empty() ? Rat(0) : Rat(slope[i]);
        row.rhs.offset = Rat(offset[i]);
        sys.push_back(std::move(row));
    }
    if (with_nonneg) {
        for (std::int64_t j = 0; j < n; ++j) {
            FmRow row;
            row.a.assign(static_cast<std::size_t>(n), Rat(0));
            row.a[j] = -1;
            row.rhs = {Rat(0), Rat(0)};
            sys.push_back(std::move(row));
        }
    }
    return sys;
}

std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p()) throw guard_error("value out of 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

// Reduce a variable-free system 0 <= slope*k + offset to its window of
// feasible k >= 0.
FeasibleWindow window_of(const FmSystem& eliminated) {
    FeasibleWindow w;
    Int lo = 0;
    std::optional<Int> hi;
    for (const auto& row : eliminated) {
        const Rat& s = row.rhs.slope;
        const Rat& o = row.rhs.offset;
        if (s == 0) {
            if (o < 0) { w.empty_for_all = true; return w; }
        } else if (s > 0) {
            lo = std::max(lo, rat_ceil(-o / s));
        } else {
            Int u = rat_floor(-o / s);
            hi = hi ? std::min(*hi, u) : u;
        }
    }
    if (hi && (*hi < lo || *hi < 0)) { w.empty_for_all = true; return w; }
    w.lo = to_i64(lo);
    if (hi) w.hi = to_i64(*hi);
    return w;
}

FeasibleWindow window_for(const IntMatrix& A, std::span<const std::int64_t> slope,
                          std::span<const std::int64_t> offset) {
    FmSystem sys = fm_build(A, slope, offset, /*with_nonneg=*/true);
    fm_prune(sys);
    for (std::int64_t j = 0; j < A.col_count(); ++j)
        sys = fm_eliminate(sys, static_cast<std::size_t>(j));
    return window_of(sys);
}

}  // namespace

FeasibleWindow parametric_feasible_window(const ParametricSystem& ps) {
    check_dims(ps.A, ps.b.size());
    if (ps.b.size() != ps.c.size()) throw std::invalid_argument("slope/offset length mismatch");
    return window_for(ps.A, ps.b, ps.c);
}

bool is_empty(const ConstraintSystem& sys) {
    check_dims(sys.A, sys.b.size());
    FeasibleWindow w = window_for(sys.A, {}, sys.b);
    return w.empty_for_all;
}

bool has_trivial_recession_cone(const IntMatrix& A) {
    const std::int64_t n = A.col_count();
    std::vector<std::int64_t> zeros(A.rows.size(), 0);
    for (std::int64_t j = 0; j < n; ++j) {
        // { Ay <= 0, y >= 0, y_j >= 1 } is feasible iff the cone has a ray
        // with a positive j-th coordinate.
        IntMatrix B = A;
        std::vector<std::int64_t> rhs = zeros;
        std::vector<std::int64_t> unit(static_cast<std::size_t>(n), 0);
        unit[j] = -1;
        B.rows.push_back(unit);
        rhs.push_back(-1);
        if (!is_empty(ConstraintSystem{std::move(B), std::move(rhs)})) return false;
    }
    return true;
}

bool is_bounded(const ConstraintSystem& sys) {
    if (is_empty(sys)) return true;
    return has_trivial_recession_cone(sys.A);
}

bool is_totally_unimodular(const IntMatrix& A) {
    const std::int64_t m = A.row_count(), n = A.col_count();
    for (const auto& row : A.rows)
        for (auto v : row)
            if (v < -1 || v > 1) return false;
    const std::int64_t kmax = std::min(m, n);
    if (kmax > 12) throw guard_error("totally-unimodular check capped at 12x12 minors");

    // Fraction-free determinant of the selected submatrix.
    auto det = [&](const std::vector<std::int64_t>& ri, const std::vector<std::int64_t>& ci) {
        const std::size_t k = ri.size();
        std::vector<std::vector<Int>> w(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) w[i][j] = A.at(ri[i], ci[j]);
        Int prev = 1;
        int sign = 1;
        for (std::size_t p = 0; p + 1 < k; ++p) {
            std::size_t pivot = p;
            while (pivot < k && w[pivot][p] == 0) ++pivot;
            if (pivot == k) return Int(0);
            if (pivot != p) { std::swap(w[pivot], w[p]); sign = -sign; }
            for (std::size_t i = p + 1; i < k; ++i)
                for (std::size_t j = p + 1; j < k; ++j)
                    w[i][j] = (w[i][j] * w[p][p] - w[i][p] * w[p][j]) / prev;
            prev = w[p][p];
        }
        return Int(sign * w[k - 1][k - 1]);
    };

    bool ok = true;
    auto combos = [&](std::int64_t total, std::int64_t k, auto&& visit) {
        std::vector<std::int64_t> idx(k);
        auto rec = [&](auto&& self, std::int64_t pos, std::int64_t start) -> void {
            if (!ok) return;
            if (pos == k) { visit(idx); return; }
            for (std::int64_t v = start; v <= total - (k - pos); ++v) {
                idx[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    };

    for (std::int64_t k = 2; k <= kmax && ok; ++k) {
        combos(m, k, [&](const std::vector<std::int64_t>& ri) {
            combos(n, k, [&](const std::vector<std::int64_t>& ci) {
                Int d = det(ri, ci);
                if (d < -1 || d > 1) ok = false;
            });
        });
    }
    return ok;
}

namespace {

struct LatticeWalker {
    std::vector<FmSystem> proj;  // proj[j]: constraints on x_0..x_j
    std::int64_t n;

    explicit LatticeWalker(const ConstraintSystem& sys) {
        n = sys.A.col_count();
        proj.resize(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)));
        FmSystem base = fm_build(sys.A, {}, sys.b, /*with_nonneg=*/true);
        fm_prune(base);
        if (n == 0) return;
        proj[n - 1] = base;
        for (std::int64_t j = n - 1; j >= 1; --j)
            proj[j - 1] = fm_eliminate(proj[j], static_cast<std::size_t>(j));
    }

    // Feasibility for n == 0 systems (possibly with zero-coefficient rows).
    bool origin_feasible(const ConstraintSystem& sys) const {
        return std::all_of(sys.b.begin(), sys.b.end(), [](std::int64_t v) { return v >= 0; });
    }

    template <typename Leaf>
    void walk(const ConstraintSystem& sys, Leaf&& leaf) const {
        if (n == 0) {
            if (origin_feasible(sys)) {
                std::vector<std::int64_t> empty;
                leaf(empty);
            }
            return;
        }
        std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, std::int64_t j) -> void {
            std::int64_t lo = 0;
            std::optional<Int> hi;
            for (const auto& row : proj[j]) {
                const Rat& cj = row.a[j];
                if (cj == 0) continue;
                Rat rest = row.rhs.offset;
                for (std::int64_t i = 0; i < j; ++i) rest -= row.a[i] * x[i];
                if (cj > 0) {
                    Int u = rat_floor(rest / cj);
                    hi = hi ? std::min(*hi, u) : u;
                } else {
                    lo = std::max(lo, to_i64(rat_ceil(rest / cj)));
                }
            }
            if (!hi) throw std::invalid_argument("lattice enumeration on unbounded direction");
            std::int64_t upper = to_i64(*hi);
            for (std::int64_t v = lo; v <= upper; ++v) {
                x[j] = v;
                if (j + 1 == n) leaf(x);
                else self(self, j + 1);
            }
        };
        rec(rec, 0);
    }
};

}  // namespace

std::vector<std::vector<std::int64_t>> lattice_points(const ConstraintSystem& sys, std::int64_t cap) {
    check_dims(sys.A, sys.b.size());
    if (!is_bounded(sys)) throw std::invalid_argument("lattice_points: unbounded system");
    std::vector<std::vector<std::int64_t>> out;
    LatticeWalker walker(sys);
    walker.walk(sys, [&](const std::vector<std::int64_t>& x) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
            throw guard_error("lattice_points: cap exceeded");
        out.push_back(x);
    });
    return out;
}

Int lattice_point_count(const ConstraintSystem& sys) {
    check_dims(sys.A, sys.b.size());
    if (!is_bounded(sys)) throw std::invalid_argument("lattice_point_count: unbounded system");
    Int count = 0;
    LatticeWalker walker(sys);
    walker.walk(sys, [&](const std::vector<std::int64_t>&) { ++count; });
    return count;
}

ConstraintSystem transportation_projected(const TransportationSpec& spec) {
    MarginPair margins{spec.rows, spec.cols};
    for (auto v : spec.rows)
        if (v < 0) throw std::invalid_argument("margins must be nonnegative");
    for (auto v : spec.cols)
        if (v < 0) throw std::invalid_argument("margins must be nonnegative");
    if (!margins.balanced()) throw std::invalid_argument("row and column margins must balance");

    const std::int64_t s = static_cast<std::int64_t>(spec.rows.size());
    const std::int64_t t = static_cast<std::int64_t>(spec.cols.size());
    if (s == 0 || t == 0) throw std::invalid_argument("margins must be nonempty");
    const std::int64_t n = (s - 1) * (t - 1);
    auto var = [t](std::int64_t i, std::int64_t j) { return i * (t - 1) + j; };

    ConstraintSystem sys;
    for (std::int64_t i = 0; i < s - 1; ++i) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
        for (std::int64_t j = 0; j < t - 1; ++j) row[var(i, j)] = 1;
        sys.A.rows.push_back(std::move(row));
        sys.b.push_back(spec.rows[i]);
    }
    for (std::int64_t j = 0; j < t - 1; ++j) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
        for (std::int64_t i = 0; i < s - 1; ++i) row[var(i, j)] = 1;
        sys.A.rows.push_back(std::move(row));
        sys.b.push_back(spec.cols[j]);
    }
    std::vector<std::int64_t> last(static_cast<std::size_t>(n), -1);
    sys.A.rows.push_back(std::move(last));
    std::int64_t excess = spec.rows[s - 1];
    for (std::int64_t j = 0; j < t - 1; ++j) excess -= spec.cols[j];
    sys.b.push_back(excess);
    return sys;
}

Matching lift_point(const TransportationSpec& spec, std::span<const std::int64_t> x) {
    const std::int64_t s = static_cast<std::int64_t>(spec.rows.size());
    const std::int64_t t = static_cast<std::int64_t>(spec.cols.size());
    if (static_cast<std::int64_t>(x.size()) != (s - 1) * (t - 1))
        throw std::invalid_argument("lift_point: wrong coordinate count");

    Matching m;
    m.entries.assign(static_cast<std::size_t>(s), std::vector<std::int64_t>(static_cast<std::size_t>(t), 0));
    for (std::int64_t i = 0; i < s - 1; ++i)
        for (std::int64_t j = 0; j < t - 1; ++j) m.entries[i][j] = x[i * (t - 1) + j];
    for (std::int64_t i = 0; i < s - 1; ++i) {
        std::int64_t rest = spec.rows[i];
        for (std::int64_t j = 0; j < t - 1; ++j) rest -= m.entries[i][j];
        m.entries[i][t - 1] = rest;
    }
    for (std::int64_t j = 0; j < t; ++j) {
        std::int64_t rest = spec.cols[j];
        for (std::int64_t i = 0; i < s - 1; ++i) rest -= m.entries[i][j];
        m.entries[s - 1][j] = rest;
    }
    for (const auto& row : m.entries)
        for (auto v : row)
            if (v < 0) throw std::invalid_argument("lift_point: reconstruction left a negative entry");
    return m;
}

}  // namespace corecount
