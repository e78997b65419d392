#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corecount/numeric.hpp"

namespace corecount {

// Univariate polynomial with exact rational coefficients, constant term
// first. The zero polynomial has no coefficients and degree -1.
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rat> coeffs);
    static ExactPolynomial constant(Rat c);
    static ExactPolynomial zero() { return ExactPolynomial{}; }

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat leading_coefficient() const;
    Rat coefficient(std::int64_t i) const;

    Rat operator()(const Rat& x) const;
    Rat operator()(std::int64_t x) const { return (*this)(Rat(x)); }
    // Evaluate where the value must be an integer; throws otherwise.
    Int eval_integer(std::int64_t x) const;

    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial operator-() const;
    ExactPolynomial scaled(const Rat& c) const;
    // p(a*x + b).
    ExactPolynomial compose_linear(const Rat& a, const Rat& b) const;

    // Unique polynomial of degree < points.size() through the given points.
    static ExactPolynomial interpolate(std::span<const std::pair<Int, Rat>> points);

    // Human form, e.g. "3k^2 + 3k + 1".
    std::string str(char var = 'k') const;

    friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// One branch of a quasipolynomial: the polynomial governing arguments
// congruent to `residue` (mod the period), in the quotient variable
// q = (n - residue) / period. certified_lo/hi record the q-range on which the
// branch was checked against an independent count (lo > hi when unchecked).
struct QuasiBranch {
    std::int64_t residue = 0;
    ExactPolynomial poly;
    std::int64_t certified_lo = 0;
    std::int64_t certified_hi = -1;
};

// Piecewise-polynomial function of period p: branch j governs the residue
// class of anchor + j, and value(n) = branch(n mod p) evaluated at
// q = (n - residue)/p. Claimed exact for arguments n >= threshold.
class Quasipolynomial {
public:
    Quasipolynomial() = default;
    Quasipolynomial(std::int64_t period, std::int64_t anchor, std::int64_t threshold,
                    std::vector<QuasiBranch> branches);
    static Quasipolynomial zero(std::int64_t period, std::int64_t anchor);

    std::int64_t period() const { return period_; }
    std::int64_t anchor() const { return anchor_; }
    std::int64_t threshold() const { return threshold_; }
    void set_threshold(std::int64_t t) { threshold_ = t; }
    std::int64_t degree() const;
    bool is_zero() const;

    const std::vector<QuasiBranch>& branches() const { return branches_; }
    const QuasiBranch& branch_for(std::int64_t n) const;

    Rat value_rat(std::int64_t n) const;
    // Exact integer value; throws if the branch value is not integral.
    Int value(std::int64_t n) const;

private:
    std::int64_t period_ = 1;
    std::int64_t anchor_ = 0;
    std::int64_t threshold_ = 0;
    std::vector<QuasiBranch> branches_;  // branches_[j].residue == anchor_ + j
};

}  // namespace corecount
