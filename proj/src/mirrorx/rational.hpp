#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mirrorx {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Integer value of an exact-integer rational; throws otherwise.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational is not an integer: " + q.get_str());
    return q.get_num();
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
    return z.get_si();
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rational acc(1);
    Rational p = b;
    while (n) {
        if (n & 1) acc *= p;
        p *= p;
        n >>= 1;
    }
    return acc;
}

// floor(q) as Integer
inline Integer rat_floor(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace mirrorx
