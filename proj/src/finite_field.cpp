#include "charfield/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "charfield/config.hpp"
#include "charfield/numtheory.hpp"

namespace charfield {

namespace {

std::vector<long> poly_mul_mod_p(const std::vector<long>& a, const std::vector<long>& b,
                                 const std::vector<long>& modulus, long p) {
    std::vector<long> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // modulus is monic of degree n; reduce
    const size_t n = modulus.size() - 1;
    for (size_t i = prod.size(); i-- > n;) {
        long c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < n; ++j)
            prod[i - n + j] = mod_reduce(prod[i - n + j] - c * modulus[j], p);
    }
    prod.resize(n);
    return prod;
}

}  // namespace

// ---------------------------------------------------------------------------
// FqElem

long FqElem::index() const {
    long idx = 0;
    for (size_t i = c_.size(); i-- > 0;) idx = idx * ctx_->p() + c_[i];
    return idx;
}

bool FqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 0; });
}

bool FqElem::operator==(const FqElem& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("FqElem: mixed contexts");
    return c_ == o.c_;
}

FqElem FqElem::operator+(const FqElem& o) const {
    std::vector<long> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + o.c_[i]) % ctx_->p();
    return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const { return *this + (-o); }

FqElem FqElem::operator-() const {
    std::vector<long> r(c_);
    for (long& x : r) x = x == 0 ? 0 : ctx_->p() - x;
    return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
    return FqElem(ctx_, poly_mul_mod_p(c_, o.c_, ctx_->modulus(), ctx_->p()));
}

FqElem FqElem::pow(Int e) const {
    if (e < 0) return inverse().pow(-e);
    FqElem base = *this, result = ctx_->one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FqElem FqElem::inverse() const {
    if (is_zero()) throw std::domain_error("FqElem: inverse of zero");
    return pow(ctx_->q() - 2);
}

long FqElem::order() const {
    if (is_zero()) throw std::domain_error("FqElem: order of zero");
    long o = ctx_->q() - 1;
    for (auto [f, e] : factorize(o))
        while (o % f == 0 && pow(o / f) == ctx_->one()) o /= f;
    return o;
}

FqElem FqElem::frobenius(int k) const {
    FqElem r = *this;
    for (int i = 0; i < k; ++i) r = r.pow(ctx_->p());
    return r;
}

FqElem FqElem::trace_to(int m) const {
    if (ctx_->n() % m != 0) throw std::invalid_argument("trace_to: m must divide n");
    FqElem acc = ctx_->zero(), cur = *this;
    for (int i = 0; i < ctx_->n() / m; ++i) {
        acc = acc + cur;
        cur = cur.frobenius(m);
    }
    return acc;
}

FqElem FqElem::norm_to(int m) const {
    if (ctx_->n() % m != 0) throw std::invalid_argument("norm_to: m must divide n");
    FqElem acc = ctx_->one(), cur = *this;
    for (int i = 0; i < ctx_->n() / m; ++i) {
        acc = acc * cur;
        cur = cur.frobenius(m);
    }
    return acc;
}

int FqElem::quadratic_character() const {
    if (ctx_->q() % 2 == 0) throw std::domain_error("quadratic_character: q must be odd");
    if (is_zero()) throw std::domain_error("quadratic_character: zero argument");
    FqElem v = pow((ctx_->q() - 1) / 2);
    if (v == ctx_->one()) return 1;
    if (v == -ctx_->one()) return -1;
    throw std::logic_error("quadratic_character: value not +-1");
}

std::string FqElem::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// FqCtx

namespace {

// Irreducibility of a monic degree-d polynomial over F_p (coefficients as
// plain ints): no root of x^{p^k} = x for k < d divides it.  Uses gcd with
// Frobenius iterates of x.
bool irreducible_over_prime(const std::vector<long>& f, long p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    // x^(p^k) mod f via k successive p-th powers
    auto mul = [&](const std::vector<long>& a, const std::vector<long>& b) {
        return poly_mul_mod_p(a, b, f, p);
    };
    auto pow_p = [&](std::vector<long> a) {
        std::vector<long> r(f.size() - 1, 0);
        r[0] = 1;
        long e = p;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    };
    auto poly_gcd = [&](std::vector<long> a, std::vector<long> b) {
        auto deg = [](const std::vector<long>& v) {
            for (size_t i = v.size(); i-- > 0;)
                if (v[i]) return static_cast<int>(i);
            return -1;
        };
        while (deg(b) >= 0) {
            // a mod b
            int db = deg(b);
            long lead_inv = pow_mod(b[static_cast<size_t>(db)], p - 2, p);
            while (deg(a) >= db) {
                int da = deg(a);
                long c = mul_mod(a[static_cast<size_t>(da)], lead_inv, p);
                for (int j = 0; j <= db; ++j)
                    a[static_cast<size_t>(da - db + j)] =
                        mod_reduce(a[static_cast<size_t>(da - db + j)] - c * b[static_cast<size_t>(j)], p);
            }
            std::swap(a, b);
        }
        return a;
    };
    std::vector<long> x(f.size() - 1, 0);
    if (f.size() - 1 > 1) x[1] = 1;
    std::vector<long> xp = x;
    for (int k = 1; k <= d / 2; ++k) {
        xp = pow_p(xp);
        std::vector<long> diff = xp;
        diff[1] = mod_reduce(diff[1] - 1, p);
        auto g = poly_gcd(f, diff);
        int dg = -1;
        for (size_t i = g.size(); i-- > 0;)
            if (g[i]) { dg = static_cast<int>(i); break; }
        if (dg != 0) return false;  // nontrivial factor of degree <= k
    }
    return true;
}

}  // namespace

FqCtx::FqCtx(long p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("FqCtx: p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw std::invalid_argument("FqCtx: n must be positive");
    q_ = 1;
    for (int i = 0; i < n; ++i) {
        q_ *= p;
        if (q_ > bounds().max_q)
            throw BoundExceeded("FqCtx: q = p^n exceeds bound " + std::to_string(bounds().max_q));
    }
    // lexicographically smallest monic irreducible of degree n, constant first
    modulus_.assign(static_cast<size_t>(n) + 1, 0);
    modulus_[static_cast<size_t>(n)] = 1;
    if (n > 1) {
        bool found = false;
        std::vector<long> a(static_cast<size_t>(n), 0);
        while (!found) {
            for (int i = 0; i < n; ++i) modulus_[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
            if (irreducible_over_prime(modulus_, p)) {
                found = true;
                break;
            }
            // increment (a_{n-1}, ..., a_1, a_0) with a_0 least significant
            // in *lex* terms: a_0 is most significant, so count up from the
            // last coordinate
            int i = n - 1;
            while (i >= 0 && ++a[static_cast<size_t>(i)] == p) a[static_cast<size_t>(i--)] = 0;
            if (i < 0) throw std::logic_error("FqCtx: no irreducible found");
        }
    }
    // enumeration-first generator of F_q^x
    for (long idx = 1; idx < q_; ++idx) {
        FqElem cand = from_index(idx);
        if (cand.order() == q_ - 1) {
            generator_ = cand;
            break;
        }
    }
    if (generator_.is_zero() && q_ > 2)
        throw std::logic_error("FqCtx: no generator found");
    if (q_ == 2) generator_ = one();
    dlog_table_.assign(static_cast<size_t>(q_), -1);
    FqElem cur = one();
    for (long k = 0; k < q_ - 1; ++k) {
        dlog_table_[static_cast<size_t>(cur.index())] = k;
        cur = cur * generator_;
    }
}

FqElem FqCtx::zero() const { return FqElem(this, std::vector<long>(static_cast<size_t>(n_), 0)); }

FqElem FqCtx::one() const { return from_int(1); }

FqElem FqCtx::from_int(long a) const {
    std::vector<long> c(static_cast<size_t>(n_), 0);
    c[0] = mod_reduce(a, p_);
    return FqElem(this, std::move(c));
}

FqElem FqCtx::element(std::vector<long> coeffs) const {
    if (coeffs.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("FqCtx::element: wrong coefficient count");
    for (long& x : coeffs) x = mod_reduce(x, p_);
    return FqElem(this, std::move(coeffs));
}

FqElem FqCtx::from_index(long idx) const {
    if (idx < 0 || idx >= q_) throw std::invalid_argument("FqCtx::from_index: out of range");
    std::vector<long> c(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        c[static_cast<size_t>(i)] = idx % p_;
        idx /= p_;
    }
    return FqElem(this, std::move(c));
}

long FqCtx::dlog(const FqElem& a) const {
    if (a.is_zero()) throw std::domain_error("FqCtx::dlog: zero argument");
    long d = dlog_table_[static_cast<size_t>(a.index())];
    if (d < 0) throw std::logic_error("FqCtx::dlog: table miss");
    return d;
}

// ---------------------------------------------------------------------------
// FqPoly

void FqPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool FqPoly::operator==(const FqPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

std::string FqPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool is_one = c[i] == ctx->one();
        if (i == 0 || !is_one) os << c[i].str();
        if (i > 0 && !is_one) os << '*';
        if (i >= 1) os << 't';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

FqPoly make_poly(const FqCtx& ctx, const std::vector<long>& int_coeffs) {
    FqPoly f;
    f.ctx = &ctx;
    for (long a : int_coeffs) f.c.push_back(ctx.from_int(a));
    f.trim();
    return f;
}

namespace {

FqPoly poly_mul_mod(const FqPoly& a, const FqPoly& b, const FqPoly& modulus) {
    const FqCtx& ctx = *modulus.ctx;
    if (a.is_zero() || b.is_zero()) return FqPoly{&ctx, {}};
    std::vector<FqElem> prod(a.c.size() + b.c.size() - 1, ctx.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) prod[i + j] = prod[i + j] + a.c[i] * b.c[j];
    }
    const size_t n = modulus.c.size() - 1;  // modulus monic
    for (size_t i = prod.size(); i-- > n;) {
        FqElem cc = prod[i];
        if (cc.is_zero()) continue;
        prod[i] = ctx.zero();
        for (size_t j = 0; j < n; ++j) prod[i - n + j] = prod[i - n + j] - cc * modulus.c[j];
    }
    prod.resize(n, ctx.zero());
    FqPoly r{&ctx, std::move(prod)};
    r.trim();
    return r;
}

FqPoly poly_pow_mod(FqPoly base, Int e, const FqPoly& modulus) {
    FqPoly r = make_poly(*modulus.ctx, {1});
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mul_mod(r, base, modulus);
        base = poly_mul_mod(base, base, modulus);
        e >>= 1;
    }
    return r;
}

FqPoly poly_mod(FqPoly a, const FqPoly& b) {
    const FqCtx& ctx = *b.ctx;
    a.trim();
    const int db = b.degree();
    FqElem lead_inv = b.c[static_cast<size_t>(db)].inverse();
    while (a.degree() >= db) {
        const int da = a.degree();
        FqElem f = a.c[static_cast<size_t>(da)] * lead_inv;
        for (int j = 0; j <= db; ++j)
            a.c[static_cast<size_t>(da - db + j)] =
                a.c[static_cast<size_t>(da - db + j)] - f * b.c[static_cast<size_t>(j)];
        a.trim();
    }
    return a;
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FqPoly poly_x(const FqCtx& ctx) { return make_poly(ctx, {0, 1}); }

}  // namespace

bool is_irreducible(const FqPoly& f) {
    const FqCtx& ctx = *f.ctx;
    const int d = f.degree();
    if (d < 1) return false;
    if (!(f.c.back() == ctx.one())) throw std::invalid_argument("is_irreducible: must be monic");
    if (d == 1) return true;
    // x^{q^d} = x (mod f), and gcd(x^{q^{d/e}} - x, f) = 1 for prime e | d
    FqPoly x = poly_x(ctx);
    Int qd = 1;
    for (int i = 0; i < d; ++i) qd *= ctx.q();
    FqPoly xqd = poly_pow_mod(x, qd, f);
    FqPoly diff = xqd;
    // subtract x
    if (diff.c.size() < 2) diff.c.resize(2, ctx.zero());
    diff.c[1] = diff.c[1] - ctx.one();
    diff.trim();
    if (!diff.is_zero()) return false;
    for (auto [e, mult] : factorize(d)) {
        Int qk = 1;
        for (int i = 0; i < d / e; ++i) qk *= ctx.q();
        FqPoly xqk = poly_pow_mod(x, qk, f);
        FqPoly g = xqk;
        if (g.c.size() < 2) g.c.resize(2, ctx.zero());
        g.c[1] = g.c[1] - ctx.one();
        g.trim();
        FqPoly gc = poly_gcd(f, std::move(g));
        if (gc.degree() != 0) return false;
    }
    return true;
}

std::vector<FqPoly> irreducible_polynomials(int d, const FqCtx& ctx) {
    if (d < 1) throw std::invalid_argument("irreducible_polynomials: d must be positive");
    double size = 1;
    for (int i = 0; i < d; ++i) size *= static_cast<double>(ctx.q());
    if (size > static_cast<double>(bounds().max_q) * 16)
        throw BoundExceeded("irreducible_polynomials: q^d too large");
    std::vector<FqPoly> out;
    std::vector<long> idx(static_cast<size_t>(d), 0);  // coefficient element indices
    while (true) {
        FqPoly f;
        f.ctx = &ctx;
        for (int i = 0; i < d; ++i) f.c.push_back(ctx.from_index(idx[static_cast<size_t>(i)]));
        f.c.push_back(ctx.one());
        if (is_irreducible(f)) out.push_back(std::move(f));
        int i = d - 1;
        while (i >= 0 && ++idx[static_cast<size_t>(i)] == ctx.q()) idx[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return out;
}

long root_order(const FqPoly& f) {
    const FqCtx& ctx = *f.ctx;
    const int d = f.degree();
    if (d < 1 || f.c[0].is_zero())
        throw std::invalid_argument("root_order: need irreducible f with f(0) != 0");
    long qd = 1;
    for (int i = 0; i < d; ++i) {
        qd *= ctx.q();
        if (qd > bounds().max_q * 16)
            throw BoundExceeded("root_order: q^d too large");
    }
    long o = qd - 1;
    FqPoly x = poly_x(ctx);
    for (auto [pf, e] : factorize(o)) {
        while (o % pf == 0) {
            FqPoly t = poly_pow_mod(x, Int(o / pf), f);
            if (t == make_poly(ctx, {1}))
                o /= pf;
            else
                break;
        }
    }
    return o;
}

}  // namespace charfield
