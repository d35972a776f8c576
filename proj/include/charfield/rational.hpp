#pragma once

// Exact coefficient domain.  GMP's mpq_class already maintains the two
// invariants we need (lowest terms, positive denominator), so Rational is a
// direct alias rather than a wrapper.

#include <gmpxx.h>

#include <string>

namespace charfield {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace charfield
