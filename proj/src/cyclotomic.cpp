#include "charfield/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "charfield/config.hpp"
#include "charfield/numtheory.hpp"
#include "charfield/root_sum.hpp"

namespace charfield {

namespace {

// (x^n - 1) with Int coefficients.
std::vector<Int> x_pow_minus_one(long n) {
    std::vector<Int> p(static_cast<size_t>(n) + 1, Int(0));
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    return p;
}

// Exact division of integer polynomials; divisor must be monic and divide
// evenly.
std::vector<Int> exact_divide(std::vector<Int> num, const std::vector<Int>& den) {
    const size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("exact_divide: degree underflow");
    std::vector<Int> quot(num.size() - dd, Int(0));
    for (size_t i = num.size(); i-- > dd;) {
        Int c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("exact_divide: nonzero remainder");
    return quot;
}

std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}
std::mutex phi_mutex;

const std::vector<Int>& cyclotomic_polynomial_locked(long n) {
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Int> p = x_pow_minus_one(n);
    for (long d : divisors(n))
        if (d < n) p = exact_divide(std::move(p), cyclotomic_polynomial_locked(d));
    return cache.emplace(n, std::move(p)).first->second;
}

// In-place: fold exponents mod n, then reduce modulo Phi_n; resizes to phi(n).
void reduce_mod_phi(long n, std::vector<Rational>& v) {
    const size_t un = static_cast<size_t>(n);
    if (v.size() > un) {
        for (size_t i = v.size(); i-- > un;) {
            if (v[i] != 0) v[i % un] += v[i];
        }
        v.resize(un);
    }
    const std::vector<Int>& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    for (size_t i = v.size(); i-- > deg;) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        for (size_t j = 0; j < deg; ++j) {
            if (phi[j] != 0) v[i - deg + j] -= c * phi[j];
        }
        v[i] = 0;
    }
    v.resize(std::max(deg, size_t(1)));
    if (deg == 0) throw std::logic_error("reduce_mod_phi: constant modulus");
}

// Canonical vector of a at `to`, where level(a) | to.
std::vector<Rational> lift_coeffs(const Cyclotomic& a, long to) {
    const long step = to / a.level();
    std::vector<Rational> v(static_cast<size_t>(to), Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != 0) v[static_cast<size_t>(step) * i] = a.coeffs()[i];
    reduce_mod_phi(to, v);
    return v;
}

// Solve sum_j x_j * basis[j] = target over Q by Gaussian elimination;
// returns false if inconsistent.
bool solve_linear(std::vector<std::vector<Rational>> cols, std::vector<Rational> target,
                  std::vector<Rational>& out) {
    const size_t rows = target.size(), ncols = cols.size();
    std::vector<size_t> pivot_col(rows, SIZE_MAX);
    size_t rank = 0;
    for (size_t j = 0; j < ncols && rank < rows; ++j) {
        size_t piv = SIZE_MAX;
        for (size_t i = rank; i < rows; ++i)
            if (cols[j][i] != 0) { piv = i; break; }
        if (piv == SIZE_MAX) continue;
        for (size_t jj = j; jj < ncols; ++jj) std::swap(cols[jj][piv], cols[jj][rank]);
        std::swap(target[piv], target[rank]);
        Rational inv = cols[j][rank];
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || cols[j][i] == 0) continue;
            Rational f = cols[j][i] / inv;
            for (size_t jj = j; jj < ncols; ++jj) cols[jj][i] -= f * cols[jj][rank];
            target[i] -= f * target[rank];
        }
        pivot_col[rank] = j;
        ++rank;
    }
    out.assign(ncols, Rational(0));
    for (size_t i = 0; i < rank; ++i) out[pivot_col[i]] = target[i] / cols[pivot_col[i]][i];
    // consistency: rows below the rank must be zero
    for (size_t i = rank; i < rows; ++i)
        if (target[i] != 0) return false;
    return true;
}

long lcm_level(long a, long b) {
    const long l = std::lcm(a, b);
    check_level_bound(l);
    return l;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    check_level_bound(n);
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclotomic_polynomial_locked(n);
}

Cyclotomic::Cyclotomic(const Rational& value) : level_(1), c_{value} {}

Cyclotomic Cyclotomic::root(long n, long e) {
    if (n < 1) throw std::invalid_argument("root: level must be positive");
    check_level_bound(n);
    std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
    v[static_cast<size_t>(mod_reduce(e, n))] = 1;
    reduce_mod_phi(n, v);
    return Cyclotomic(n, std::move(v));
}

Cyclotomic Cyclotomic::from_terms(long n, const std::vector<std::pair<long, Rational>>& terms) {
    if (n < 1) throw std::invalid_argument("from_terms: level must be positive");
    check_level_bound(n);
    std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
    for (const auto& [e, c] : terms) v[static_cast<size_t>(mod_reduce(e, n))] += c;
    reduce_mod_phi(n, v);
    return Cyclotomic(n, std::move(v));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: element is not rational: " + str());
    return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (Rational& c : r.c_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    const long l = lcm_level(level_, o.level_);
    std::vector<Rational> a = (l == level_) ? c_ : lift_coeffs(*this, l);
    std::vector<Rational> b = (l == o.level_) ? o.c_ : lift_coeffs(o, l);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    level_ = l;
    c_ = std::move(a);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    const long l = lcm_level(level_, o.level_);
    std::vector<Rational> a = (l == level_) ? c_ : lift_coeffs(*this, l);
    std::vector<Rational> b = (l == o.level_) ? o.c_ : lift_coeffs(o, l);
    std::vector<Rational> prod(a.size() + b.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    reduce_mod_phi(l, prod);
    level_ = l;
    c_ = std::move(prod);
    return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (level_ == o.level_) return c_ == o.c_;
    const long l = lcm_level(level_, o.level_);
    return lift_coeffs(*this, l) == lift_coeffs(o, l);
}

Cyclotomic Cyclotomic::galois(long s) const {
    s = mod_reduce(s, level_);
    if (level_ == 1) return *this;
    if (std::gcd(s, level_) != 1)
        throw std::invalid_argument("galois: exponent " + std::to_string(s) +
                                    " not coprime to level " + std::to_string(level_));
    std::vector<Rational> v(static_cast<size_t>(level_), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) v[static_cast<size_t>(mul_mod(s, static_cast<long>(i), level_))] += c_[i];
    reduce_mod_phi(level_, v);
    return Cyclotomic(level_, std::move(v));
}

Cyclotomic Cyclotomic::conjugate() const { return level_ <= 2 ? *this : galois(level_ - 1); }

Cyclotomic Cyclotomic::at_level(long m) const {
    if (m < 1) throw std::invalid_argument("at_level: level must be positive");
    check_level_bound(m);
    if (m == level_) return *this;
    if (m % level_ == 0) return Cyclotomic(m, lift_coeffs(*this, m));
    const long l = std::lcm(level_, m);
    std::vector<Rational> target = (l == level_) ? c_ : lift_coeffs(*this, l);
    // columns: canonical forms at level l of the level-m power basis
    std::vector<std::vector<Rational>> basis;
    const long phim = totient(m);
    basis.reserve(static_cast<size_t>(phim));
    for (long j = 0; j < phim; ++j) basis.push_back(lift_coeffs(Cyclotomic::root(m, j), l));
    std::vector<Rational> sol;
    if (!solve_linear(std::move(basis), std::move(target), sol))
        throw std::domain_error("at_level: element " + str() + " does not lie in Q(zeta_" +
                                std::to_string(m) + ")");
    return Cyclotomic(m, std::move(sol));
}

std::string Cyclotomic::key() const {
    std::ostringstream os;
    os << '(' << level_ << ')';
    for (const Rational& c : c_) os << ' ' << c.get_str();
    return os.str();
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (first) {
            if (c < 0) { os << '-'; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << '*';
            os << 'z' << level_;
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

// ---------------------------------------------------------------------------
// RootSum / RootAccum

RootSum RootSum::rational(const Rational& r) {
    RootSum s;
    if (r != 0) s.terms.emplace_back(0, r);
    return s;
}

RootSum RootSum::root(long n, long e, const Rational& coeff) {
    check_level_bound(n);
    RootSum s;
    s.level = n;
    if (coeff != 0) s.terms.emplace_back(mod_reduce(e, n), coeff);
    return s;
}

void RootSum::add_term(long e, const Rational& c) {
    terms.emplace_back(mod_reduce(e, level), c);
    normalize();
}

void RootSum::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long, Rational>> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    terms = std::move(out);
}

RootSum RootSum::at_level(long n) const {
    if (n % level != 0) throw std::invalid_argument("RootSum::at_level: not a multiple");
    check_level_bound(n);
    RootSum s;
    s.level = n;
    const long step = n / level;
    for (const auto& [e, c] : terms) s.terms.emplace_back(e * step, c);
    s.normalize();
    return s;
}

RootSum RootSum::conjugate() const {
    RootSum s;
    s.level = level;
    for (const auto& [e, c] : terms) s.terms.emplace_back(mod_reduce(-e, level), c);
    s.normalize();
    return s;
}

RootSum RootSum::galois(long g) const {
    if (level > 1 && std::gcd(mod_reduce(g, level), level) != 1)
        throw std::invalid_argument("RootSum::galois: not coprime to level");
    RootSum s;
    s.level = level;
    for (const auto& [e, c] : terms) s.terms.emplace_back(mul_mod(mod_reduce(g, level), e, level), c);
    s.normalize();
    return s;
}

RootSum& RootSum::operator+=(const RootSum& o) {
    const long l = lcm_level(level, o.level);
    RootSum a = at_level(l), b = o.at_level(l);
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    a.normalize();
    return *this = std::move(a);
}

RootSum& RootSum::operator*=(const RootSum& o) {
    const long l = lcm_level(level, o.level);
    RootSum a = at_level(l), b = o.at_level(l);
    RootSum prod;
    prod.level = l;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            prod.terms.emplace_back(mod_reduce(ea + eb, l), ca * cb);
    prod.normalize();
    return *this = std::move(prod);
}

RootSum& RootSum::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& t : terms) t.second *= c;
    return *this;
}

Cyclotomic RootSum::to_cyclotomic() const { return Cyclotomic::from_terms(level, terms); }

std::string RootSum::key() const {
    std::ostringstream os;
    os << '(' << level << ')';
    for (const auto& [e, c] : terms) os << ' ' << e << ':' << c.get_str();
    return os.str();
}

std::string RootSum::str() const { return to_cyclotomic().str(); }

RootAccum::RootAccum(long n) : n_(n), v_(static_cast<size_t>(n), Rational(0)) {
    check_level_bound(n);
}

void RootAccum::add_product(const RootSum& a, const RootSum& b, const Rational& scale) {
    if (scale == 0 || a.is_zero() || b.is_zero()) return;
    const long sa = n_ / a.level, sb = n_ / b.level;
    if (sa * a.level != n_ || sb * b.level != n_)
        throw std::invalid_argument("RootAccum: level does not divide accumulator level");
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            v_[static_cast<size_t>(mod_reduce(ea * sa + eb * sb, n_))] += scale * ca * cb;
}

void RootAccum::add(const RootSum& a, const Rational& scale) {
    add_product(a, RootSum::rational(1), scale);
}

Cyclotomic RootAccum::value() const {
    std::vector<std::pair<long, Rational>> terms;
    for (size_t i = 0; i < v_.size(); ++i)
        if (v_[i] != 0) terms.emplace_back(static_cast<long>(i), v_[i]);
    return Cyclotomic::from_terms(n_, terms);
}

}  // namespace charfield
