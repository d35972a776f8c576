#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is stored at an explicit level n as its unique representative on
// the power basis {zeta_n^i : 0 <= i < phi(n)}, obtained by reduction modulo
// the n-th cyclotomic polynomial.  Equality, Galois action and level changes
// all go through this canonical form.  Binary operations unify the two levels
// at their lcm; results are never auto-lowered (at_level is the explicit way
// down).

#include <string>
#include <utility>
#include <vector>

#include "charfield/rational.hpp"

namespace charfield {

// Phi_n as an integer coefficient vector, coeff[i] the coefficient of x^i.
// Computed by exact division Phi_n(x) = (x^n - 1) / prod_{d|n, d<n} Phi_d(x)
// and cached; safe for concurrent use.
const std::vector<Int>& cyclotomic_polynomial(long n);

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Rational(0)) {}
    Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value);                       // NOLINT(google-explicit-constructor)

    // zeta_n^e (e taken mod n).
    static Cyclotomic root(long n, long e);
    // sum of coeff * zeta_n^exp over the given (exp, coeff) terms.
    static Cyclotomic from_terms(long n, const std::vector<std::pair<long, Rational>>& terms);

    long level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws std::domain_error if not rational

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // The automorphism zeta_n -> zeta_n^s; requires gcd(s, level) = 1.
    Cyclotomic galois(long s) const;
    // Complex conjugation (= galois(-1)).
    Cyclotomic conjugate() const;

    // Same abstract number re-expressed at level m.  Lifting is always
    // possible; lowering throws std::domain_error if the element does not lie
    // in Q(zeta_m).
    Cyclotomic at_level(long m) const;

    // Comparison key "(level) c0,c1,..." -- total order for use in sets/maps.
    std::string key() const;
    // Human-readable form like "1/2 - z8 + 3*z8^3".
    std::string str() const;

private:
    Cyclotomic(long level, std::vector<Rational> coeffs)
        : level_(level), c_(std::move(coeffs)) {}

    long level_;
    std::vector<Rational> c_;  // size phi(level_)
};

inline Cyclotomic cyclo_root(long n, long e) { return Cyclotomic::root(n, e); }

}  // namespace charfield
