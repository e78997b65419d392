#include "corecount/fibre.hpp"

#include <numeric>
#include <stdexcept>

namespace corecount {

FibreProblem::FibreProblem(std::int64_t s_, std::int64_t t_, Partition sigma_, Partition tau_)
    : s(s_), t(t_), sigma(std::move(sigma_)), tau(std::move(tau_)) {
    if (s < 1 || t < 1) throw std::invalid_argument("moduli must be positive");
    if (has_hook(sigma, s)) throw std::invalid_argument("sigma is not an s-core");
    if (has_hook(tau, t)) throw std::invalid_argument("tau is not a t-core");
}

std::int64_t FibreProblem::d() const { return std::gcd(s, t); }
std::int64_t FibreProblem::m() const { return std::lcm(s, t); }
std::int64_t FibreProblem::ell0() const { return std::max(sigma.length(), tau.length()); }
bool FibreProblem::compatible() const { return core(sigma, d()) == core(tau, d()); }

Int count_brute(const FibreProblem& p, std::int64_t k, std::int64_t cap) {
    if (k < 0) throw std::invalid_argument("count_brute: k must be nonnegative");
    if (multichoose(p.m(), k) > cap) throw guard_error("count_brute: enumeration cap exceeded");
    Int total = 0;
    for_each_multiset(p.m(), k, [&](const std::vector<std::int64_t>& counts) {
        Partition lambda = multiset_to_core(ResidueMultiset(p.m(), counts));
        if (core(lambda, p.s) == p.sigma && core(lambda, p.t) == p.tau) ++total;
    });
    return total;
}

Int count_brute_pruned(const FibreProblem& p, std::int64_t k, std::int64_t cap) {
    if (k < 0) throw std::invalid_argument("count_brute_pruned: k must be nonnegative");
    if (k < p.sigma.length() || k < p.tau.length()) return 0;
    const std::int64_t m = p.m(), s = p.s, t = p.t;
    std::vector<std::int64_t> rem_s = core_multiset(p.sigma, s, k).counts();
    std::vector<std::int64_t> rem_t = core_multiset(p.tau, t, k).counts();

    std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
    std::int64_t nodes = 0;
    Int total = 0;
    auto rec = [&](auto&& self, std::int64_t r, std::int64_t left) -> void {
        if (++nodes > cap) throw guard_error("count_brute_pruned: node cap exceeded");
        if (r == m) {
            if (left != 0) return;
            Partition lambda = multiset_to_core(ResidueMultiset(m, counts));
            if (core(lambda, s) != p.sigma || core(lambda, t) != p.tau)
                throw std::logic_error("count_brute_pruned: pruning accepted a non-member");
            ++total;
            return;
        }
        std::int64_t room = 0;  // most that residues r..m-1 can still absorb
        for (std::int64_t r2 = r; r2 < m; ++r2)
            room += std::min(rem_s[r2 % s], rem_t[r2 % t]);
        if (room < left) return;
        std::int64_t hi = std::min({left, rem_s[r % s], rem_t[r % t]});
        for (std::int64_t v = 0; v <= hi; ++v) {
            counts[r] = v;
            rem_s[r % s] -= v;
            rem_t[r % t] -= v;
            self(self, r + 1, left - v);
            rem_s[r % s] += v;
            rem_t[r % t] += v;
        }
        counts[r] = 0;
    };
    rec(rec, 0, k);
    return total;
}

MarginPair margins_coprime(const FibreProblem& p, std::int64_t i, std::int64_t k) {
    if (p.d() != 1) throw std::invalid_argument("margins_coprime: s and t must be coprime");
    if (i < p.ell0()) throw std::invalid_argument("margins_coprime: anchor below ell0");
    if (k < 0) throw std::invalid_argument("margins_coprime: k must be nonnegative");
    MarginPair margins;
    margins.rows = core_multiset(p.sigma, p.s, i).counts();
    for (auto& v : margins.rows) v += k * p.t;
    margins.cols = core_multiset(p.tau, p.t, i).counts();
    for (auto& v : margins.cols) v += k * p.s;
    return margins;
}

Int count_coprime(const FibreProblem& p, std::int64_t k) {
    if (p.d() != 1) throw std::invalid_argument("count_coprime: s and t must be coprime");
    const std::int64_t ell0 = p.ell0(), period = p.s * p.t;
    if (k < ell0) throw std::invalid_argument("count_coprime: k below ell0");
    const std::int64_t i = ell0 + (k - ell0) % period;
    const std::int64_t q = (k - i) / period;
    return count_matchings(margins_coprime(p, i, q));
}

FactoredProblem factor_noncoprime(const FibreProblem& p, std::int64_t i) {
    if (i < p.ell0()) throw std::invalid_argument("factor_noncoprime: anchor below ell0");
    if (!p.compatible())
        throw std::invalid_argument("factor_noncoprime: d-cores differ, every fibre count is zero");
    const std::int64_t d = p.d();
    FiniteMultiset f(core_multiset(p.sigma, p.s, i));
    FiniteMultiset g(core_multiset(p.tau, p.t, i));
    auto fs = restrict_to_classes(f, d);
    auto gs = restrict_to_classes(g, d);

    FactoredProblem out;
    out.anchor = i;
    for (std::int64_t j = 0; j < d; ++j) {
        FactoredPiece piece;
        piece.ell = fs[j].cardinality();
        if (piece.ell != gs[j].cardinality())
            throw std::logic_error("factor_noncoprime: class cardinalities disagree");
        piece.sigma = multiset_to_core(ResidueMultiset(p.s / d, fs[j].counts()));
        piece.tau = multiset_to_core(ResidueMultiset(p.t / d, gs[j].counts()));
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

Int count_general(const FibreProblem& p, std::int64_t k) {
    if (!p.compatible()) return 0;
    if (k < p.ell0()) throw std::invalid_argument("count_general: k below ell0");
    if (p.d() == 1) return count_coprime(p, k);
    const std::int64_t m = p.m(), d = p.d();
    const std::int64_t i = p.ell0() + (k - p.ell0()) % m;
    const std::int64_t q = (k - i) / m;
    FactoredProblem factored = factor_noncoprime(p, i);
    Int product = 1;
    for (const auto& piece : factored.pieces) {
        FibreProblem sub(p.s / d, p.t / d, piece.sigma, piece.tau);
        product *= count_coprime(sub, piece.ell + (m / d) * q);
    }
    return product;
}

Int divisor_fibre_count(std::int64_t a, std::int64_t b, const Partition& sigma, std::int64_t k) {
    if (b < 1 || a < 1 || a % b != 0) throw std::invalid_argument("divisor_fibre_count: b must divide a");
    if (has_hook(sigma, b)) throw std::invalid_argument("divisor_fibre_count: sigma is not a b-core");
    if (k < sigma.length()) throw std::invalid_argument("divisor_fibre_count: k below length(sigma)");
    ResidueMultiset h = core_multiset(sigma, b, k);
    Int product = 1;
    for (std::int64_t j = 0; j < b; ++j) product *= multichoose(a / b, h.count(j));
    return product;
}

Quasipolynomial divisor_quasipoly(std::int64_t a, std::int64_t b, const Partition& sigma) {
    if (b < 1 || a < 1 || a % b != 0) throw std::invalid_argument("divisor_quasipoly: b must divide a");
    if (has_hook(sigma, b)) throw std::invalid_argument("divisor_quasipoly: sigma is not a b-core");
    const std::int64_t c = a / b;
    const std::int64_t anchor = sigma.length();

    Rat factorial_inv = 1;
    for (std::int64_t r = 2; r < c; ++r) factorial_inv *= Rat(r);
    factorial_inv = make_rat(1, factorial_inv.get_num());

    std::vector<QuasiBranch> branches;
    for (std::int64_t i = anchor; i < anchor + b; ++i) {
        ResidueMultiset h = core_multiset(sigma, b, i);
        // multichoose(c, h_j + n) = C(n + h_j + c - 1, c - 1) as a polynomial in n.
        ExactPolynomial branch = ExactPolynomial::constant(Rat(1));
        for (std::int64_t j = 0; j < b; ++j) {
            ExactPolynomial factor = ExactPolynomial::constant(factorial_inv);
            for (std::int64_t r = 1; r < c; ++r)
                factor = factor * ExactPolynomial({Rat(h.count(j) + r), Rat(1)});
            branch = branch * factor;
        }
        QuasiBranch qb;
        qb.residue = i;
        qb.poly = branch;
        branches.push_back(std::move(qb));
    }
    return Quasipolynomial(b, anchor, anchor, std::move(branches));
}

}  // namespace corecount
