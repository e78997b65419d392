#include "corecount/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace corecount {

ExactPolynomial::ExactPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ExactPolynomial ExactPolynomial::constant(Rat c) {
    if (c == 0) return ExactPolynomial{};
    return ExactPolynomial({std::move(c)});
}

void ExactPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat ExactPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat ExactPolynomial::coefficient(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat ExactPolynomial::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int ExactPolynomial::eval_integer(std::int64_t x) const {
    Rat v = (*this)(Rat(x));
    if (!is_integer(v)) throw std::logic_error("polynomial value not integral at " + std::to_string(x));
    return v.get_num();
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
    return *this + (-o);
}

ExactPolynomial ExactPolynomial::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& v : c) v = -v;
    return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::scaled(const Rat& c) const {
    std::vector<Rat> v = coeffs_;
    for (auto& x : v) x *= c;
    return ExactPolynomial(std::move(v));
}

ExactPolynomial ExactPolynomial::compose_linear(const Rat& a, const Rat& b) const {
    // Horner in the substituted variable: p(ax+b).
    ExactPolynomial inner({b, a});
    ExactPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + ExactPolynomial::constant(*it);
    return acc;
}

ExactPolynomial ExactPolynomial::interpolate(std::span<const std::pair<Int, Rat>> points) {
    // Lagrange form; the systems here are tiny.
    ExactPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        ExactPolynomial basis = ExactPolynomial::constant(Rat(1));
        Rat denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * ExactPolynomial({Rat(-points[j].first), Rat(1)});
            denom *= Rat(points[i].first - points[j].first);
        }
        result = result + basis.scaled(points[i].second / denom);
    }
    return result;
}

std::string ExactPolynomial::str(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t i = degree(); i >= 0; --i) {
        Rat c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || i == 0) os << to_string(a);
        if (i >= 1) {
            os << var;
            if (i >= 2) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

Quasipolynomial::Quasipolynomial(std::int64_t period, std::int64_t anchor, std::int64_t threshold,
                                 std::vector<QuasiBranch> branches)
    : period_(period), anchor_(anchor), threshold_(threshold), branches_(std::move(branches)) {
    if (period_ < 1) throw std::invalid_argument("period must be positive");
    if (static_cast<std::int64_t>(branches_.size()) != period_)
        throw std::invalid_argument("expected one branch per residue");
    for (std::int64_t j = 0; j < period_; ++j)
        if (branches_[j].residue != anchor_ + j)
            throw std::invalid_argument("branch residues must be anchor, anchor+1, ...");
}

Quasipolynomial Quasipolynomial::zero(std::int64_t period, std::int64_t anchor) {
    std::vector<QuasiBranch> branches(static_cast<std::size_t>(period));
    for (std::int64_t j = 0; j < period; ++j) branches[j].residue = anchor + j;
    return Quasipolynomial(period, anchor, 0, std::move(branches));
}

std::int64_t Quasipolynomial::degree() const {
    std::int64_t d = -1;
    for (const auto& b : branches_) d = std::max(d, b.poly.degree());
    return d;
}

bool Quasipolynomial::is_zero() const {
    return std::all_of(branches_.begin(), branches_.end(),
                       [](const QuasiBranch& b) { return b.poly.is_zero(); });
}

const QuasiBranch& Quasipolynomial::branch_for(std::int64_t n) const {
    std::int64_t j = (n - anchor_) % period_;
    if (j < 0) j += period_;
    return branches_[j];
}

Rat Quasipolynomial::value_rat(std::int64_t n) const {
    const QuasiBranch& b = branch_for(n);
    std::int64_t q = (n - b.residue) / period_;  // exact: n == residue (mod period)
    return b.poly(q);
}

Int Quasipolynomial::value(std::int64_t n) const {
    Rat v = value_rat(n);
    if (!is_integer(v)) throw std::logic_error("quasipolynomial value not integral at " + std::to_string(n));
    return v.get_num();
}

}  // namespace corecount
