#pragma once

// Sparse sums of roots of unity.
//
// Character table entries are short combinations like q*zeta^a or
// -(zeta^b + zeta^(bq)), and orthogonality sums multiply thousands of such
// pairs.  Doing that on canonical Cyclotomic values would pay a polynomial
// reduction per product, so the tables keep their entries in this sparse
// exponent form and only reduce once per accumulated sum (RootAccum) or when
// a canonical value is actually needed (to_cyclotomic).

#include <utility>
#include <vector>

#include "charfield/cyclotomic.hpp"
#include "charfield/rational.hpp"

namespace charfield {

struct RootSum {
    long level = 1;
    // (exponent mod level, coefficient), sorted by exponent, coefficients
    // nonzero, exponents distinct.
    std::vector<std::pair<long, Rational>> terms;

    static RootSum rational(const Rational& r);
    static RootSum root(long n, long e, const Rational& coeff = Rational(1));

    bool is_zero() const { return terms.empty(); }
    void add_term(long e, const Rational& c);  // e taken mod level
    void normalize();                          // sort/merge/drop zeros

    RootSum at_level(long n) const;  // level must be a multiple of this->level
    RootSum conjugate() const;       // exponents negated
    RootSum galois(long s) const;    // exponents scaled by s (gcd(s, level) = 1)

    RootSum& operator+=(const RootSum& o);
    RootSum& operator*=(const RootSum& o);
    RootSum& operator*=(const Rational& c);
    friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
    friend RootSum operator*(RootSum a, const RootSum& b) { return a *= b; }
    friend RootSum operator*(RootSum a, const Rational& c) { return a *= c; }

    Cyclotomic to_cyclotomic() const;
    // Key identifying the sparse form (not the algebraic value) -- used to
    // deduplicate generator lists cheaply before canonicalization.
    std::string key() const;
    std::string str() const;
};

// Accumulates sums of term products at a fixed level N in the group ring
// Q[Z_N], reducing to a canonical Cyclotomic only on demand.
class RootAccum {
public:
    explicit RootAccum(long n);
    // += scale * a * b; levels of a and b must divide N.
    void add_product(const RootSum& a, const RootSum& b, const Rational& scale);
    void add(const RootSum& a, const Rational& scale);
    Cyclotomic value() const;

private:
    long n_;
    std::vector<Rational> v_;  // coefficient of zeta_N^i
};

}  // namespace charfield
