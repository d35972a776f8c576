#include "charfield/galois_fields.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "charfield/config.hpp"
#include "charfield/finite_field.hpp"
#include "charfield/numtheory.hpp"

namespace charfield {

// ---------------------------------------------------------------------------
// ResidueGroup

ResidueGroup ResidueGroup::full(long n) {
    return ResidueGroup{n, units_mod(n)};
}

ResidueGroup ResidueGroup::generated(long n, const std::vector<long>& gens) {
    if (n == 1) return ResidueGroup{1, {0}};
    std::set<long> closure{1};
    std::vector<long> frontier{1};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long a : frontier)
            for (long g : gens) {
                if (std::gcd(mod_reduce(g, n), n) != 1)
                    throw std::invalid_argument("ResidueGroup::generated: generator not a unit");
                long b = mul_mod(a, mod_reduce(g, n), n);
                if (closure.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return ResidueGroup{n, {closure.begin(), closure.end()}};
}

bool ResidueGroup::contains(long a) const {
    a = mod_reduce(a, modulus);
    return std::binary_search(elements.begin(), elements.end(), a);
}

bool ResidueGroup::is_subgroup() const {
    if (modulus == 1) return elements == std::vector<long>{0};
    if (!contains(1)) return false;
    for (long a : elements) {
        if (std::gcd(a, modulus) != 1) return false;
        for (long b : elements)
            if (!contains(mul_mod(a, b, modulus))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// FieldDescriptor

namespace {

// Preimage of H <= Z_f^x under reduction Z_L^x -> Z_f^x (f | L).
ResidueGroup lift_subgroup(const ResidueGroup& h, long L) {
    if (L % h.modulus != 0) throw std::invalid_argument("lift_subgroup: modulus mismatch");
    if (L == h.modulus) return h;
    std::vector<long> elems;
    for (long s : units_mod(L))
        if (h.modulus == 1 || h.contains(s % h.modulus)) elems.push_back(s);
    return ResidueGroup{L, std::move(elems)};
}

}  // namespace

bool FieldDescriptor::is_subfield_of(const FieldDescriptor& other) const {
    const long L = std::lcm(conductor, other.conductor);
    ResidueGroup mine = lift_subgroup(fixing, L);
    ResidueGroup theirs = lift_subgroup(other.fixing, L);
    // this subfield of other <=> other's fixing group fixes this too
    return std::includes(mine.elements.begin(), mine.elements.end(), theirs.elements.begin(),
                         theirs.elements.end());
}

std::vector<std::string> FieldDescriptor::names() const {
    std::vector<std::string> out;
    if (degree == 1) {
        out.push_back("Q");
        return out;
    }
    const long f = conductor;
    if (fixing.elements == std::vector<long>{1}) out.push_back("Q(zeta_" + std::to_string(f) + ")");
    if (f > 4 && degree == totient(f) / 2 && fixing.contains(f - 1))
        out.push_back("Q(zeta_" + std::to_string(f) + " + zeta_" + std::to_string(f) + "^-1)");
    if (degree == 2) {
        std::vector<long> candidates;
        if (f % 4 != 0) {
            if (f % 4 == 1) candidates.push_back(f);
            if (f % 4 == 3) candidates.push_back(-f);
        } else {
            const long k = f / 4;
            if (k % 4 == 2 || k % 4 == 3) candidates.push_back(k);
            if (k % 4 == 1 || k % 4 == 2) candidates.push_back(-k);
        }
        for (long m : candidates) {
            if (!is_squarefree(m)) continue;
            if (quadratic_field(m) == *this)
                out.push_back(m == -1 ? std::string("Q(i)") : "Q(sqrt(" + std::to_string(m) + "))");
        }
    }
    return out;
}

std::string FieldDescriptor::str() const {
    std::ostringstream os;
    os << "field(conductor=" << conductor << ", degree=" << degree << ", fixed_by={";
    for (size_t i = 0; i < fixing.elements.size(); ++i)
        os << (i ? "," : "") << fixing.elements[i];
    os << "}";
    auto nm = names();
    if (!nm.empty()) {
        os << " = ";
        for (size_t i = 0; i < nm.size(); ++i) os << (i ? " = " : "") << nm[i];
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// stabilizer / field_of / field_reduce

namespace {

// Stabilizer of a single element inside Z_{level(a)}^x, by brute force over
// the automorphisms.
ResidueGroup element_stabilizer(const Cyclotomic& a) {
    const long n = a.level();
    std::vector<long> elems;
    for (long s : units_mod(n))
        if (n == 1 || a.galois(s) == a) elems.push_back(s);
    ResidueGroup h{n, std::move(elems)};
    if (!h.is_subgroup()) throw std::logic_error("element_stabilizer: not a subgroup");
    return h;
}

// Conductor-canonical descriptor of the field generated by one element.
FieldDescriptor element_field(const Cyclotomic& a) {
    return field_reduce(a.level(), element_stabilizer(a));
}

std::vector<FieldDescriptor> distinct_element_fields(const std::vector<Cyclotomic>& gens) {
    std::set<std::string> seen;
    std::vector<FieldDescriptor> fields;
    for (const Cyclotomic& g : gens) {
        if (!seen.insert(g.key()).second) continue;
        FieldDescriptor d = element_field(g);
        if (d.degree > 1) fields.push_back(std::move(d));
    }
    return fields;
}

}  // namespace

ResidueGroup stabilizer(const std::vector<Cyclotomic>& gens, long N) {
    check_level_bound(N);
    std::vector<FieldDescriptor> fields = distinct_element_fields(gens);
    for (const FieldDescriptor& d : fields)
        if (N % d.conductor != 0)
            throw std::invalid_argument(
                "stabilizer: generator with conductor " + std::to_string(d.conductor) +
                " is not expressible at level " + std::to_string(N));
    std::vector<long> elems;
    for (long s : units_mod(N)) {
        bool fixes_all = true;
        for (const FieldDescriptor& d : fields) {
            if (!d.fixing.contains(s % d.conductor)) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all) elems.push_back(s);
    }
    ResidueGroup h{N, std::move(elems)};
    if (N == 1) h.elements = {0};
    if (!h.is_subgroup()) throw std::logic_error("stabilizer: result is not a subgroup");
    return h;
}

FieldDescriptor field_reduce(long N, const ResidueGroup& H) {
    if (H.modulus != N) throw std::invalid_argument("field_reduce: modulus mismatch");
    if (N == 1) return FieldDescriptor{};
    if (!H.is_subgroup()) throw std::invalid_argument("field_reduce: H is not a subgroup");
    std::unordered_set<long> in_h(H.elements.begin(), H.elements.end());
    for (long n : divisors(N)) {
        // kernel criterion: H must absorb every unit = 1 (mod n)
        bool kernel_inside = true;
        for (long u : units_mod(N)) {
            if ((n == 1 || u % n == 1) && !in_h.count(u)) {
                kernel_inside = false;
                break;
            }
        }
        if (!kernel_inside) continue;
        if (n == 1) return FieldDescriptor{};
        std::set<long> image;
        for (long h : H.elements) image.insert(h % n);
        ResidueGroup g{n, {image.begin(), image.end()}};
        long deg = totient(n) / g.order();
        return FieldDescriptor{n, std::move(g), deg};
    }
    throw std::logic_error("field_reduce: unreachable (N divides N)");
}

FieldDescriptor field_of(const std::vector<Cyclotomic>& gens) {
    std::vector<FieldDescriptor> fields = distinct_element_fields(gens);
    long N = 1;
    for (const FieldDescriptor& d : fields) {
        N = std::lcm(N, d.conductor);
        check_level_bound(N);
    }
    if (N == 1) return FieldDescriptor{};
    std::vector<long> elems;
    for (long s : units_mod(N)) {
        bool fixes_all = true;
        for (const FieldDescriptor& d : fields)
            if (!d.fixing.contains(s % d.conductor)) {
                fixes_all = false;
                break;
            }
        if (fixes_all) elems.push_back(s);
    }
    return field_reduce(N, ResidueGroup{N, std::move(elems)});
}

FieldDescriptor field_of(const std::vector<RootSum>& gens) {
    std::set<std::string> seen;
    std::vector<Cyclotomic> cyc;
    for (const RootSum& g : gens)
        if (seen.insert(g.key()).second) cyc.push_back(g.to_cyclotomic());
    return field_of(cyc);
}

FieldDescriptor fixed_field(long N, const std::vector<long>& subgroup_gens) {
    return field_reduce(N, ResidueGroup::generated(N, subgroup_gens));
}

FieldDescriptor unique_subfield(long ell, int r, long d) {
    if (!is_prime(ell) || ell == 2)
        throw std::invalid_argument("unique_subfield: ell must be an odd prime");
    if (r < 1) throw std::invalid_argument("unique_subfield: r must be positive");
    long n = 1;
    for (int i = 0; i < r; ++i) n *= ell;
    check_level_bound(n);
    const long phi = totient(n);
    if (d < 1 || phi % d != 0)
        throw std::invalid_argument("unique_subfield: degree " + std::to_string(d) +
                                    " does not divide phi(" + std::to_string(n) + ")");
    const long g = primitive_root_mod(n);
    return fixed_field(n, {pow_mod(g, d, n)});
}

// ---------------------------------------------------------------------------
// Named constructions

FieldDescriptor rational_field() { return FieldDescriptor{}; }

FieldDescriptor cyclotomic_field(long d) { return field_of({Cyclotomic::root(d, 1)}); }

FieldDescriptor real_cyclotomic_field(long d) {
    return field_of({Cyclotomic::root(d, 1) + Cyclotomic::root(d, -1)});
}

FieldDescriptor gaussian_field() { return quadratic_field(-1); }

namespace {

// An element squaring to m (times a rational square), built from quadratic
// Gauss sums and zeta_8 combinations.
Cyclotomic sqrt_element(long m) {
    Cyclotomic g(Rational(1));
    long square = 1;
    long abs_m = m < 0 ? -m : m;
    for (auto [p, e] : factorize(abs_m)) {
        if (p == 2) {
            g *= Cyclotomic::root(8, 1) + Cyclotomic::root(8, -1);  // sqrt(2)
            square *= 2;
        } else {
            g *= sqrt_qstar_element(p, 1);
            square *= (p % 4 == 1) ? p : -p;
        }
    }
    if (square != m) {
        if (square != -m) throw std::logic_error("sqrt_element: sign bookkeeping failed");
        g *= Cyclotomic::root(4, 1);
    }
    return g;
}

}  // namespace

FieldDescriptor quadratic_field(long m) {
    if (m == 0 || m == 1 || !is_squarefree(m))
        throw std::invalid_argument("quadratic_field: m must be squarefree and != 0, 1");
    return field_of({sqrt_element(m)});
}

RootSum sqrt_qstar_root_sum(long p, int n) {
    if (p == 2) throw std::invalid_argument("sqrt_qstar: p must be odd");
    FqCtx ctx(p, n);
    RootSum g;
    g.level = p;
    for (long idx = 1; idx < ctx.q(); ++idx) {
        FqElem u = ctx.from_index(idx);
        const int eta = u.quadratic_character();
        const long tr = u.trace_to(1).coeffs()[0];
        g.terms.emplace_back(tr, Rational(eta));
    }
    g.normalize();
    return g;
}

Cyclotomic sqrt_qstar_element(long p, int n) {
    Cyclotomic g = sqrt_qstar_root_sum(p, n).to_cyclotomic();
    long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    if (g * g != Cyclotomic(Rational(qstar(q))))
        throw std::logic_error("sqrt_qstar_element: square check failed");
    return g;
}

FieldDescriptor sqrt_qstar_field(long p, int n) { return field_of({sqrt_qstar_element(p, n)}); }

}  // namespace charfield
