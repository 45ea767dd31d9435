#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace simplexmetrics {

// Exact arbitrary-precision rational, always stored canonical
// (gcd-reduced, positive denominator). mpq_class canonicalizes on
// construction from integers; string parsing goes through from_string.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical "p/q" (or "p" when q = 1), q > 0, gcd(p,q) = 1.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

// Exact square root if the rational is a perfect square of a rational.
inline bool rational_sqrt_exact(const Rational& q, Rational& out) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return false;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
    out = Rational(num, den);
    return true;
}

}  // namespace simplexmetrics
