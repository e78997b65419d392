#include "corecount/ehrhart.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace corecount {

namespace {

struct WorkingSystem {
    IntMatrix A;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> c;

    std::int64_t rows() const { return A.row_count(); }
    std::int64_t cols() const { return A.col_count(); }
};

// Canonical memo key: the system's count is invariant under row permutation.
std::string key_of(const WorkingSystem& w) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::int64_t i = 0; i < w.rows(); ++i) {
        auto row = w.A.rows[i];
        row.push_back(w.b[i]);
        row.push_back(w.c[i]);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    os << w.cols() << ';';
    for (const auto& row : rows) {
        for (auto v : row) os << v << ',';
        os << ';';
    }
    return os.str();
}

struct EhrhartContext {
    std::map<std::string, ExactPolynomial> memo;
    std::int64_t nodes = 0;
    static constexpr std::int64_t kNodeLimit = 2'000'000;
};

ExactPolynomial recurse(EhrhartContext& ctx, WorkingSystem w);

// Single-variable base case: the polytope is the interval between the
// tightest lower and upper bounding lines. The x >= 0 constraint acts as a
// lower bound with slope 0 and offset 0.
ExactPolynomial interval_count(const WorkingSystem& w) {
    bool have_upper = false;
    std::int64_t bp = 0, cp = 0;  // B+, C+
    std::int64_t bm = 0, cm = 0;  // B-, C- (initialised by the x >= 0 row)
    for (std::int64_t i = 0; i < w.rows(); ++i) {
        const std::int64_t a = w.A.at(i, 0);
        if (a == 1) {
            if (!have_upper || w.b[i] < bp) { bp = w.b[i]; cp = w.c[i]; have_upper = true; }
            else if (w.b[i] == bp) cp = std::min(cp, w.c[i]);
        } else if (a == -1) {
            const std::int64_t lb = -w.b[i], lc = -w.c[i];
            if (lb > bm) { bm = lb; cm = lc; }
            else if (lb == bm) cm = std::max(cm, lc);
        } else {
            throw std::logic_error("interval_count: non-unimodular entry");
        }
    }
    if (!have_upper) throw guard_error("count_parametric: unbounded direction");
    if (bm > bp) return ExactPolynomial::zero();
    if (bm < bp)
        return ExactPolynomial({Rat(cp - cm + 1), Rat(bp - bm)});
    return ExactPolynomial::constant(Rat(std::max<std::int64_t>(cp - cm + 1, 0)));
}

// Base case c == 0: N(A, b*k) is the lattice-point count of the k-th dilate
// of an integral polytope, hence a polynomial; interpolate it on k = 0..n
// and confirm on the next three values.
ExactPolynomial dilation_count(const WorkingSystem& w) {
    const std::int64_t n = w.cols();
    auto count_at = [&](std::int64_t k) {
        std::vector<std::int64_t> rhs(w.b.size());
        for (std::size_t i = 0; i < w.b.size(); ++i) rhs[i] = w.b[i] * k;
        return lattice_point_count(ConstraintSystem{w.A, std::move(rhs)});
    };
    std::vector<std::pair<Int, Rat>> points;
    for (std::int64_t k = 0; k <= n; ++k) points.emplace_back(Int(k), Rat(count_at(k)));
    ExactPolynomial f = ExactPolynomial::interpolate(points);
    for (std::int64_t k = n + 1; k <= n + 3; ++k)
        if (f(k) != Rat(count_at(k)))
            throw std::logic_error("dilation count is not polynomial: non-integral input?");
    return f;
}

ExactPolynomial recurse_impl(EhrhartContext& ctx, WorkingSystem w) {
    // Drop zero rows: 0 <= b_i k + c_i either fails for all large k (count 0)
    // or holds for all large k (row vacuous).
    {
        IntMatrix A2;
        std::vector<std::int64_t> b2, c2;
        for (std::int64_t i = 0; i < w.rows(); ++i) {
            bool zero = std::all_of(w.A.rows[i].begin(), w.A.rows[i].end(),
                                    [](std::int64_t v) { return v == 0; });
            if (zero) {
                if (w.b[i] < 0 || (w.b[i] == 0 && w.c[i] < 0)) return ExactPolynomial::zero();
                continue;
            }
            A2.rows.push_back(w.A.rows[i]);
            b2.push_back(w.b[i]);
            c2.push_back(w.c[i]);
        }
        w = WorkingSystem{std::move(A2), std::move(b2), std::move(c2)};
    }

    const std::int64_t n = w.cols();
    if (w.rows() == 0 && n > 0) throw guard_error("count_parametric: unconstrained direction");
    if (n == 0) return ExactPolynomial::constant(Rat(1));

    // Eventual emptiness (Farkas via elimination): a family feasible on at
    // most a bounded range of k counts zero for large k.
    FeasibleWindow window = parametric_feasible_window(ParametricSystem{w.A, w.b, w.c});
    if (window.empty_for_all || window.hi) return ExactPolynomial::zero();

    if (n == 1) return interval_count(w);
    if (std::all_of(w.c.begin(), w.c.end(), [](std::int64_t v) { return v == 0; }))
        return dilation_count(w);

    // Slice on the first row with a nonzero offset.
    std::int64_t r = 0;
    while (w.c[r] == 0) ++r;
    std::swap(w.A.rows[r], w.A.rows[0]);
    std::swap(w.b[r], w.b[0]);
    std::swap(w.c[r], w.c[0]);
    std::int64_t pc = 0;
    while (w.A.at(0, pc) == 0) ++pc;
    if (pc != 0)
        for (auto& row : w.A.rows) std::swap(row[pc], row[0]);

    const std::int64_t pivot = w.A.at(0, 0);
    if (pivot != 1 && pivot != -1)
        throw std::logic_error("count_parametric: pivot not unimodular");

    // Eliminate x_0 from the slice a_0 . x = b_0 k + l. The first row of the
    // reduced system is the x_0 >= 0 constraint.
    WorkingSystem sliced;
    sliced.b.resize(w.rows());
    sliced.c.resize(w.rows());
    for (std::int64_t i = 0; i < w.rows(); ++i) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(n - 1));
        for (std::int64_t j = 1; j < n; ++j) {
            row[j - 1] = (i == 0) ? pivot * w.A.at(0, j)
                                  : w.A.at(i, j) - w.A.at(i, 0) * pivot * w.A.at(0, j);
            if (row[j - 1] < -1 || row[j - 1] > 1)
                throw std::logic_error("count_parametric: pivot broke unimodularity");
        }
        sliced.A.rows.push_back(std::move(row));
        sliced.b[i] = (i == 0) ? pivot * w.b[0] : w.b[i] - w.A.at(i, 0) * pivot * w.b[0];
    }
    auto slice_offsets = [&](std::int64_t l) {
        std::vector<std::int64_t> c(w.rows());
        for (std::int64_t i = 0; i < w.rows(); ++i)
            c[i] = (i == 0) ? pivot * l : w.c[i] - w.A.at(i, 0) * pivot * l;
        return c;
    };

    const std::int64_t c1 = w.c[0];
    WorkingSystem relaxed = w;
    relaxed.c[0] = 0;
    ExactPolynomial f = recurse(ctx, std::move(relaxed));
    if (c1 > 0) {
        for (std::int64_t l = 1; l <= c1; ++l)
            f = f + recurse(ctx, WorkingSystem{sliced.A, sliced.b, slice_offsets(l)});
    } else {
        for (std::int64_t l = c1 + 1; l <= 0; ++l)
            f = f - recurse(ctx, WorkingSystem{sliced.A, sliced.b, slice_offsets(l)});
    }
    return f;
}

ExactPolynomial recurse(EhrhartContext& ctx, WorkingSystem w) {
    if (++ctx.nodes > EhrhartContext::kNodeLimit)
        throw guard_error("count_parametric: recursion budget exhausted");
    std::string key = key_of(w);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
    ExactPolynomial result = recurse_impl(ctx, std::move(w));
    ctx.memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

ParametricCount count_parametric(const ParametricSystem& ps, const CountOracle& oracle) {
    if (ps.b.size() != ps.A.rows.size() || ps.c.size() != ps.A.rows.size())
        throw std::invalid_argument("count_parametric: dimension mismatch");
    if (!is_totally_unimodular(ps.A))
        throw guard_error("count_parametric: matrix is not totally unimodular");

    FeasibleWindow window = parametric_feasible_window(ps);
    if (window.eventually_feasible() && !has_trivial_recession_cone(ps.A))
        throw guard_error("count_parametric: polytope family is unbounded");

    EhrhartContext ctx;
    ExactPolynomial poly = recurse(ctx, WorkingSystem{ps.A, ps.b, ps.c});

    CountOracle count = oracle;
    if (!count) count = [&ps](std::int64_t k) { return lattice_point_count(ps.at(k)); };

    // Certify: find the least k0 such that the polynomial matches the oracle
    // on n+3 consecutive arguments starting at k0.
    const std::int64_t window_len = ps.A.col_count() + 3;
    std::int64_t start = 0;
    if (!window.eventually_feasible())
        start = window.empty_for_all ? 0 : *window.hi + 1;
    std::int64_t run = 0;
    for (std::int64_t k = start; k <= start + 64 + window_len - 1; ++k) {
        run = (poly(k) == Rat(count(k))) ? run + 1 : 0;
        if (run == window_len) {
            ParametricCount out;
            out.poly = std::move(poly);
            out.threshold = k - window_len + 1;
            out.certified_lo = out.threshold;
            out.certified_hi = k;
            return out;
        }
    }
    throw guard_error("count_parametric: certification failed up to the k0 <= 64 cap");
}

namespace {

// Margins r_j(k) = row_slope_j * k + row_offset_j (and likewise columns),
// with the matching parametric constraint system of the projected
// transportation polytope.
struct MarginFamily {
    std::vector<std::int64_t> row_slopes, row_offsets;
    std::vector<std::int64_t> col_slopes, col_offsets;

    MarginPair at(std::int64_t k) const {
        MarginPair m;
        for (std::size_t i = 0; i < row_slopes.size(); ++i)
            m.rows.push_back(row_slopes[i] * k + row_offsets[i]);
        for (std::size_t j = 0; j < col_slopes.size(); ++j)
            m.cols.push_back(col_slopes[j] * k + col_offsets[j]);
        return m;
    }

    ParametricSystem system() const {
        const std::int64_t s = static_cast<std::int64_t>(row_slopes.size());
        const std::int64_t t = static_cast<std::int64_t>(col_slopes.size());
        ConstraintSystem shape = transportation_projected(TransportationSpec{row_slopes, col_slopes});
        ParametricSystem ps;
        ps.A = std::move(shape.A);
        ps.b = std::move(shape.b);
        for (std::int64_t i = 0; i < s - 1; ++i) ps.c.push_back(row_offsets[i]);
        for (std::int64_t j = 0; j < t - 1; ++j) ps.c.push_back(col_offsets[j]);
        std::int64_t excess = row_offsets[s - 1];
        for (std::int64_t j = 0; j < t - 1; ++j) excess -= col_offsets[j];
        ps.c.push_back(excess);
        return ps;
    }
};

MarginFamily margin_family(const FibreProblem& p, std::int64_t anchor) {
    MarginFamily fam;
    fam.row_offsets = core_multiset(p.sigma, p.s, anchor).counts();
    fam.col_offsets = core_multiset(p.tau, p.t, anchor).counts();
    fam.row_slopes.assign(static_cast<std::size_t>(p.s), p.t);
    fam.col_slopes.assign(static_cast<std::size_t>(p.t), p.s);
    return fam;
}

}  // namespace

Quasipolynomial fibre_quasipolynomial(const FibreProblem& p, const FibreQuasipolyOptions& opts) {
    const std::int64_t m = p.m(), d = p.d(), ell0 = p.ell0();
    if (!p.compatible()) return Quasipolynomial::zero(m, ell0);

    std::vector<QuasiBranch> branches;
    std::int64_t threshold = ell0;
    for (std::int64_t i = ell0; i < ell0 + m; ++i) {
        std::vector<MarginFamily> families;
        if (d == 1) {
            families.push_back(margin_family(p, i));
        } else {
            FactoredProblem factored = factor_noncoprime(p, i);
            for (const auto& piece : factored.pieces) {
                FibreProblem sub(p.s / d, p.t / d, piece.sigma, piece.tau);
                families.push_back(margin_family(sub, piece.ell));
            }
        }

        ExactPolynomial branch_poly = ExactPolynomial::constant(Rat(1));
        for (const auto& fam : families) {
            CountOracle margin_count = [&fam](std::int64_t q) { return count_matchings(fam.at(q)); };
            branch_poly = branch_poly * count_parametric(fam.system(), margin_count).poly;
        }

        // Certify the assembled branch against the factored matching counts.
        auto branch_count = [&](std::int64_t q) {
            Int prod = 1;
            for (const auto& fam : families) prod *= count_matchings(fam.at(q));
            return prod;
        };
        const std::int64_t window_len = std::max<std::int64_t>(branch_poly.degree(), 0) + 3;
        std::int64_t q0 = -1, run = 0;
        for (std::int64_t q = 0; q <= 64 + window_len - 1; ++q) {
            run = (branch_poly(q) == Rat(branch_count(q))) ? run + 1 : 0;
            if (run == window_len) { q0 = q - window_len + 1; break; }
        }
        if (q0 < 0) throw guard_error("fibre_quasipolynomial: branch certification failed");

        QuasiBranch qb;
        qb.residue = i;
        qb.poly = std::move(branch_poly);
        qb.certified_lo = q0;
        qb.certified_hi = q0 + window_len - 1;

        if (opts.validate_brute) {
            for (std::int64_t q = qb.certified_lo; q <= qb.certified_hi; ++q) {
                Int brute = count_brute_pruned(p, i + m * q, opts.brute_cap);
                if (Rat(brute) != qb.poly(q))
                    throw guard_error("fibre_quasipolynomial: branch disagrees with direct enumeration");
            }
        }
        if (q0 > 0) threshold = std::max(threshold, i + m * (q0 - 1) + 1);
        branches.push_back(std::move(qb));
    }
    return Quasipolynomial(m, ell0, threshold, std::move(branches));
}

Rat relative_volume(const TransportationSpec& spec) {
    ConstraintSystem shape = transportation_projected(spec);
    ParametricSystem ps{shape.A, shape.b, std::vector<std::int64_t>(shape.b.size(), 0)};
    MarginPair margins{spec.rows, spec.cols};
    CountOracle margin_count = [&](std::int64_t k) {
        MarginPair scaled = margins;
        for (auto& v : scaled.rows) v *= k;
        for (auto& v : scaled.cols) v *= k;
        return count_matchings(scaled);
    };
    ParametricCount pc = count_parametric(ps, margin_count);
    if (pc.poly.is_zero()) return Rat(0);
    return pc.poly.leading_coefficient();
}

VolumeReport uniform_volume(std::int64_t s, std::int64_t t) {
    if (s < 1 || t < 1) throw std::invalid_argument("uniform_volume: s and t must be positive");
    TransportationSpec spec;
    spec.rows.assign(static_cast<std::size_t>(s), t);
    spec.cols.assign(static_cast<std::size_t>(t), s);
    VolumeReport report;
    report.s = s;
    report.t = t;
    report.dimension = (s - 1) * (t - 1);
    report.volume = relative_volume(spec);
    return report;
}

Quasipolynomial exact_length_quasipoly(const FibreProblem& p, const FibreQuasipolyOptions& opts) {
    Quasipolynomial q = fibre_quasipolynomial(p, opts);
    const std::int64_t m = q.period(), anchor = q.anchor();
    std::vector<QuasiBranch> branches;
    for (std::int64_t j = 0; j < m; ++j) {
        const QuasiBranch& cur = q.branches()[j];
        QuasiBranch out;
        out.residue = cur.residue;
        if (j > 0) {
            const QuasiBranch& prev = q.branches()[j - 1];
            out.poly = cur.poly - prev.poly;
            out.certified_lo = std::max(cur.certified_lo, prev.certified_lo);
            out.certified_hi = std::min(cur.certified_hi, prev.certified_hi);
        } else {
            // n - 1 falls in the last residue class, one period down.
            const QuasiBranch& prev = q.branches()[m - 1];
            out.poly = cur.poly - prev.poly.compose_linear(Rat(1), Rat(-1));
            out.certified_lo = std::max(cur.certified_lo, prev.certified_lo + 1);
            out.certified_hi = std::min(cur.certified_hi, prev.certified_hi + 1);
        }
        branches.push_back(std::move(out));
    }
    Quasipolynomial diff(m, anchor, std::max(q.threshold() + 1, anchor + 1), std::move(branches));
    return diff;
}

VerifyReport verify_quasipoly(const Quasipolynomial& q, const CountOracle& oracle,
                              std::int64_t lo, std::int64_t hi) {
    VerifyReport report;
    report.lo = lo;
    report.hi = hi;
    for (std::int64_t n = lo; n <= hi; ++n) {
        Int expected = oracle(n);
        Rat got = q.value_rat(n);
        if (got != Rat(expected)) {
            report.ok = false;
            report.first_mismatch = n;
            report.expected = expected;
            if (is_integer(got)) report.got = got.get_num();
            return report;
        }
    }
    return report;
}

}  // namespace corecount
