#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace corecount {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a computation exceeds a caller-supplied cap or a certification
// loop gives up. The CLI maps this to exit code 3.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Int binomial(const Int& n, std::int64_t k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// multichoose(n, k) = C(k + n - 1, k), the number of multisets of
// cardinality k on an n-element set.
inline Int multichoose(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0) return 0;
    if (k == 0) return 1;
    if (n == 0) return 0;
    return binomial(Int(n) + k - 1, k);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& v) {
    if (is_integer(v)) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace corecount
