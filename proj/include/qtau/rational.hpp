#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtau {

// Exact arbitrary-precision rational, always in lowest terms with a
// positive denominator (GMP keeps results canonical when inputs are).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (is_zero(base)) throw std::domain_error("pow_rational: negative power of zero");
        return pow_rational(Rational(1) / base, -exp);
    }
    Rational acc(1), b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// (2n-1)!! for n >= 0 (empty product for n = 0).
inline Rational double_factorial_odd(unsigned n) {
    Rational acc(1);
    for (unsigned j = 1; j <= n; ++j) acc *= rational(2 * static_cast<long>(j) - 1);
    return acc;
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace qtau
