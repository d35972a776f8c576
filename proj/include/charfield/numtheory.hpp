#pragma once

// Small-integer number theory helpers (everything here is desk scale, so
// trial division is fine throughout).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charfield {

inline long mod_reduce(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long mul_mod(long a, long b, long n) {
    return static_cast<long>((static_cast<__int128>(a) * b) % n);
}

inline long pow_mod(long a, long e, long n) {
    if (n == 1) return 0;
    long r = 1;
    a = mod_reduce(a, n);
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, n);
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline long totient(long n) {
    long phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline int moebius(long n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

// Smallest k >= 1 with q^k = 1 (mod n); requires gcd(q, n) = 1.
inline long mult_order(long q, long n) {
    if (n < 1) throw std::invalid_argument("mult_order: modulus must be positive");
    if (n == 1) return 1;
    q = mod_reduce(q, n);
    if (std::gcd(q, n) != 1) throw std::invalid_argument("mult_order: arguments not coprime");
    long k = totient(n);
    for (auto [p, e] : factorize(k))
        while (k % p == 0 && pow_mod(q, k / p, n) == 1) k /= p;
    return k;
}

inline std::vector<long> units_mod(long n) {
    std::vector<long> u;
    if (n == 1) return {0};  // trivial group
    for (long a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) u.push_back(a);
    return u;
}

// A generator of Z_n^x for n in {1, 2, 4, p^r, 2 p^r} (p an odd prime).
inline long primitive_root_mod(long n) {
    long phi = totient(n);
    for (long g : units_mod(n)) {
        if (n == 1) return 0;
        if (mult_order(g, n) == phi) return g;
    }
    throw std::invalid_argument("primitive_root_mod: Z_" + std::to_string(n) + "^x is not cyclic");
}

// Legendre symbol (a/p) for an odd prime p.
inline int legendre(long a, long p) {
    a = mod_reduce(a, p);
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline bool is_squarefree(long n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

// q = p^n for prime p; returns {p, n} or throws.
inline std::pair<long, int> prime_power_split(long q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    auto f = factorize(q);
    if (f.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {f[0].first, f[0].second};
}

}  // namespace charfield
