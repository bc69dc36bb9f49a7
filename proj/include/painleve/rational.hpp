#ifndef PAINLEVE_RATIONAL_HPP
#define PAINLEVE_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace painleve {

// Exact rational scalar. GMP keeps values canonical (gcd(num,den)=1, den>0)
// under all arithmetic; constructors below canonicalize explicitly.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc(1), b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

// binomial(c, n) for rational c: c(c-1)...(c-n+1)/n!
inline Rational rational_binomial(const Rational& c, unsigned n) {
    Rational acc(1);
    for (unsigned k = 0; k < n; ++k) {
        acc *= (c - Rational(static_cast<long>(k)));
        acc /= Rational(static_cast<long>(k) + 1);
    }
    return acc;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace painleve

#endif
