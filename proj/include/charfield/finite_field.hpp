#pragma once

// Exact arithmetic in F_q = F_{p^n} at desk scale.
//
// Contexts are deterministic: the modulus is the lexicographically smallest
// monic irreducible of degree n over F_p (coefficients compared constant
// term first) and the generator is the enumeration-first element of
// multiplicative order q - 1.  This makes class labels and JSON output
// reproducible across runs.

#include <memory>
#include <string>
#include <vector>

#include "charfield/rational.hpp"

namespace charfield {

class FqCtx;

class FqElem {
public:
    FqElem() = default;  // invalid until assigned from a context

    const FqCtx& ctx() const { return *ctx_; }
    const std::vector<long>& coeffs() const { return c_; }
    long index() const;  // sum c_i p^i -- the enumeration position

    bool is_zero() const;
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inverse() const;
    FqElem pow(Int e) const;  // negative exponents invert

    long order() const;              // multiplicative order; requires != 0
    FqElem frobenius(int k = 1) const;  // a^(p^k)
    FqElem trace_to(int m) const;    // trace to F_{p^m}, m | n
    FqElem norm_to(int m) const;     // norm to F_{p^m}, m | n
    int quadratic_character() const;  // +1 / -1; requires q odd, != 0

    std::string str() const;

private:
    friend class FqCtx;
    FqElem(const FqCtx* ctx, std::vector<long> c) : ctx_(ctx), c_(std::move(c)) {}

    const FqCtx* ctx_ = nullptr;
    std::vector<long> c_;  // length n, entries in [0, p)
};

class FqCtx {
public:
    // Deterministic construction; rejects composite p and oversized q.
    FqCtx(long p, int n);
    FqCtx(const FqCtx&) = delete;
    FqCtx& operator=(const FqCtx&) = delete;

    long p() const { return p_; }
    int n() const { return n_; }
    long q() const { return q_; }
    const std::vector<long>& modulus() const { return modulus_; }  // length n+1, monic

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(long a) const;                // image of the integer a
    FqElem element(std::vector<long> coeffs) const;
    FqElem from_index(long idx) const;            // inverse of FqElem::index()
    const FqElem& generator() const { return generator_; }
    long dlog(const FqElem& a) const;             // generator()^dlog = a; a != 0

private:
    friend class FqElem;
    long p_;
    int n_;
    long q_;
    std::vector<long> modulus_;
    FqElem generator_;
    std::vector<long> dlog_table_;  // index -> dlog
};

// Monic polynomial over F_q; c[i] is the coefficient of t^i.  Zero is the
// empty vector.  (Used for irreducible enumeration and root orders; not a
// general-purpose polynomial type.)
struct FqPoly {
    const FqCtx* ctx = nullptr;
    std::vector<FqElem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();
    bool operator==(const FqPoly& o) const;
    std::string str() const;  // e.g. "t^2 + 2*t + 1" with F_p constants
};

FqPoly make_poly(const FqCtx& ctx, const std::vector<long>& int_coeffs);

bool is_irreducible(const FqPoly& f);

// All monic irreducible polynomials of degree d over F_q, in deterministic
// (constant-first lexicographic) order; count is (1/d) sum_{e|d} mu(e) q^{d/e}.
std::vector<FqPoly> irreducible_polynomials(int d, const FqCtx& ctx);

// Order of the image of t in F_q[t]/(f) = F_{q^d}; requires f irreducible
// with nonzero constant term.
long root_order(const FqPoly& f);

}  // namespace charfield
