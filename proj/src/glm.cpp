#include "charfield/glm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "charfield/config.hpp"
#include "charfield/finite_field.hpp"
#include "charfield/gl2_sl2.hpp"
#include "charfield/numtheory.hpp"

namespace charfield {

namespace {

long checked_pow(long base, int e) {
    long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > bounds().max_level / base) throw BoundExceeded("prime power exceeds level bound");
        v *= base;
    }
    return v;
}

// Smallest p-power >= largest Jordan block size.
long unipotent_order(long p, long max_part) {
    long v = 1;
    while (v < max_part) v *= p;
    return v;
}

void partitions_rec(long k, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(k, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(k - part, part, cur, out);
        cur.pop_back();
    }
}

struct PolyInfo {
    std::vector<long> poly;
    int degree;
    long root_order;
};

void classes_rec(const std::vector<PolyInfo>& polys, std::size_t idx, int remaining, long p,
                 std::vector<ClassFactor>& cur, std::vector<ClassType>& out) {
    if (remaining == 0) {
        ClassType t;
        t.factors = cur;
        long ord = 1, max_part = 1;
        for (const ClassFactor& f : t.factors) {
            ord = std::lcm(ord, f.root_order);
            max_part = std::max(max_part, f.partition.empty() ? 1 : f.partition[0]);
        }
        t.element_order = ord * unipotent_order(p, max_part);
        out.push_back(std::move(t));
        return;
    }
    if (idx == polys.size()) return;
    classes_rec(polys, idx + 1, remaining, p, cur, out);  // skip this polynomial
    const PolyInfo& pi = polys[idx];
    for (long k = 1; k * pi.degree <= remaining; ++k)
        for (const auto& lambda : partitions_of(k)) {
            cur.push_back({pi.poly, pi.degree, pi.root_order, lambda});
            classes_rec(polys, idx + 1, remaining - static_cast<int>(k) * pi.degree, p, cur, out);
            cur.pop_back();
        }
}

}  // namespace

std::vector<std::vector<long>> partitions_of(long k) {
    if (k < 0) throw std::invalid_argument("partitions_of: k must be nonnegative");
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_rec(k, k == 0 ? 1 : k, cur, out);
    return out;
}

std::string ClassType::str() const {
    std::ostringstream os;
    os << "class(order=" << element_order;
    for (const ClassFactor& f : factors) {
        os << ", f=[";
        for (std::size_t i = 0; i < f.poly.size(); ++i) os << (i ? "," : "") << f.poly[i];
        os << "] lambda=(";
        for (std::size_t i = 0; i < f.partition.size(); ++i)
            os << (i ? "," : "") << f.partition[i];
        os << ")";
    }
    os << ")";
    return os.str();
}

std::vector<ClassType> class_types(int m, long q) {
    if (m < 1) throw std::invalid_argument("class_types: m must be positive");
    if (m > bounds().max_m) throw BoundExceeded("m exceeds configured maximum");
    if (q > bounds().max_q) throw BoundExceeded("q exceeds configured maximum");
    const auto [p, n] = prime_power_split(q);
    FqCtx ctx(p, n);
    std::vector<PolyInfo> polys;
    for (int d = 1; d <= m; ++d)
        for (const FqPoly& f : irreducible_polynomials(d, ctx)) {
            if (f.c[0].is_zero()) continue;  // exclude f = t
            std::vector<long> coeffs;
            for (const FqElem& e : f.c) coeffs.push_back(e.index());
            polys.push_back({std::move(coeffs), d, root_order(f)});
        }
    std::vector<ClassType> out;
    std::vector<ClassFactor> cur;
    classes_rec(polys, 0, m, p, cur, out);
    return out;
}

Cyclotomic omega(int d, long r, long q) {
    if (d < 1) throw std::invalid_argument("omega: d must be positive");
    const long level = std::max(checked_pow(q, d) - 1, 1L);
    RootSum s;
    s.level = level;
    long e = mod_reduce(r, level);
    for (int k = 0; k < d; ++k) {
        s.add_term(e, Rational(1));
        e = mul_mod(e, mod_reduce(q, level), level);
    }
    s.normalize();
    return s.to_cyclotomic();
}

FieldDescriptor k_glm(int m, long q) {
    if (m < 2) throw std::invalid_argument("k_glm: m must be >= 2");
    if (m > bounds().max_m) throw BoundExceeded("m exceeds configured maximum");
    std::vector<Cyclotomic> gens;
    for (int d = 1; d <= m; ++d) {
        const long level = std::max(checked_pow(q, d) - 1, 1L);
        for (long r : units_mod(level)) gens.push_back(omega(d, r, q));
    }
    return field_of(gens);
}

bool exists_order(int m, long q, long ell, int r) {
    if (!is_prime(ell) || r < 1) throw std::invalid_argument("exists_order: ell^r not a prime power");
    const auto [p, n] = prime_power_split(q);
    (void)n;
    const long lr = checked_pow(ell, r);
    if (ell == p) return checked_pow(p, r - 1) < m;
    return mult_order(mod_reduce(q, lr), lr) <= m;
}

namespace {

// Orbit sum sum_{t < k_a} zeta_{ell^a}^{i q^t} at level ell^a.
Cyclotomic orbit_sum(long la, long i, long q, long k_a) {
    RootSum s;
    s.level = la;
    long e = mod_reduce(i, la);
    for (long t = 0; t < k_a; ++t) {
        s.add_term(e, Rational(1));
        e = mul_mod(e, mod_reduce(q, la), la);
    }
    s.normalize();
    return s.to_cyclotomic();
}

void generator_rec(const std::vector<long>& la, const std::vector<long>& k,
                   const std::vector<long>& avail, long q, int r, int level, int budget,
                   const Cyclotomic& acc, std::vector<Cyclotomic>& out) {
    if (level == 0) {
        out.push_back(acc);
        return;
    }
    // copies of this level, bounded by the degree budget and by the number of
    // distinct polynomials with roots of this exact order
    const long k_a = k[level - 1];
    const long max_copies = std::min<long>(budget / k_a, avail[level - 1]);
    if (level == r && max_copies < 1) return;  // an order-ell^r factor is mandatory
    for (long copies = (level == r ? 1 : 0); copies <= max_copies; ++copies) {
        std::vector<Cyclotomic> partial{acc};
        for (long c = 0; c < copies; ++c) {  // independent character index per copy
            std::vector<Cyclotomic> next;
            for (const Cyclotomic& v : partial)
                for (long i = 0; i < la[level - 1]; ++i)
                    next.push_back(v * orbit_sum(la[level - 1], i, q, k_a));
            partial = std::move(next);
        }
        for (const Cyclotomic& v : partial)
            generator_rec(la, k, avail, q, r, level - 1, budget - static_cast<int>(copies * k_a),
                          v, out);
    }
}

}  // namespace

std::vector<Cyclotomic> order_ellr_value_generators(int m, long q, long ell, int r) {
    const auto [p, n] = prime_power_split(q);
    (void)n;
    if (ell == p)
        throw std::invalid_argument("order_ellr_value_generators: requires ell != p");
    if (!exists_order(m, q, ell, r))
        throw std::invalid_argument("no element of order " + std::to_string(ell) + "^" +
                                    std::to_string(r));
    const long lr = checked_pow(ell, r);
    std::vector<long> la(r), k(r), avail(r);
    for (int a = 1; a <= r; ++a) {
        la[a - 1] = checked_pow(ell, a);
        k[a - 1] = mult_order(mod_reduce(q, la[a - 1]), la[a - 1]);
        avail[a - 1] = totient(la[a - 1]) / k[a - 1];  // distinct order-ell^a polynomials
    }
    std::vector<Cyclotomic> gens;
    generator_rec(la, k, avail, q, r, r, m, Cyclotomic(1), gens);
    // lift to the common level and deduplicate
    std::set<std::string> seen;
    std::vector<Cyclotomic> out;
    for (const Cyclotomic& g : gens) {
        Cyclotomic lifted = g.at_level(lr);
        if (seen.insert(lifted.key()).second) out.push_back(std::move(lifted));
    }
    return out;
}

FieldDescriptor k_ellr_glm(int m, long q, long ell, int r) {
    const auto [p, n] = prime_power_split(q);
    (void)n;
    if (!exists_order(m, q, ell, r))
        throw std::invalid_argument("no element of order " + std::to_string(ell) + "^" +
                                    std::to_string(r));
    if (ell == p) return rational_field();
    const long lr = checked_pow(ell, r);
    if (ell == 2) {
        if (r == 1) return rational_field();
        if (r == 2) return q % 4 == 1 ? gaussian_field() : rational_field();
        if (m != 2)
            throw std::invalid_argument(
                "K_{2^r} with r > 2 is indeterminate per the source analysis unless m = 2");
        return CharacterTable::gl2(q).field_generated(lr);
    }
    const FieldDescriptor from_values = field_of(order_ellr_value_generators(m, q, ell, r));
    const FieldDescriptor fixed = fixed_field(lr, {mod_reduce(q, lr)});
    const FieldDescriptor by_degree =
        unique_subfield(ell, r, totient(lr) / mult_order(mod_reduce(q, lr), lr));
    if (!(from_values == fixed && fixed == by_degree))
        throw std::logic_error("k_ellr_glm: generator field " + from_values.str() +
                               ", fixed field " + fixed.str() + " and degree-selected subfield " +
                               by_degree.str() + " disagree");
    return fixed;
}

bool lemma31_check(long q, long ell, int r, const std::vector<long>& i_tuple) {
    if (!is_prime(ell) || ell == 2 || r < 1)
        throw std::invalid_argument("lemma31_check: ell must be an odd prime, r >= 1");
    if (static_cast<int>(i_tuple.size()) != r)
        throw std::invalid_argument("lemma31_check: need one index per level 1..r");
    const long lr = checked_pow(ell, r);
    if (std::gcd(mod_reduce(i_tuple.back(), lr), lr) != 1)
        throw std::invalid_argument("lemma31_check: i_r must be a unit mod ell^r");
    if (mod_reduce(q, ell) == 0) throw std::invalid_argument("lemma31_check: q must be coprime to ell");

    Cyclotomic product(1);
    for (int a = 1; a <= r; ++a) {
        const long la = checked_pow(ell, a);
        product *= orbit_sum(la, i_tuple[a - 1], q, mult_order(mod_reduce(q, la), la));
    }
    const long k_r = mult_order(mod_reduce(q, lr), lr);
    const FieldDescriptor fixed = fixed_field(lr, {mod_reduce(q, lr)});
    if (field_of({product}) != fixed) return false;
    std::set<std::string> conjugates;
    const Cyclotomic lifted = product.at_level(lr);
    for (long s : units_mod(lr)) conjugates.insert(lifted.galois(s).key());
    return static_cast<long>(conjugates.size()) == totient(lr) / k_r;
}

}  // namespace charfield
