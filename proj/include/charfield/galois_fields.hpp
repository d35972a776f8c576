#pragma once

// Abelian number fields as subfields of cyclotomic fields.
//
// A field K inside Q(zeta_f) is identified with the subgroup H of Z_f^x whose
// automorphisms fix K pointwise.  Descriptors are kept conductor-minimal so
// that field equality is descriptor equality.

#include <string>
#include <vector>

#include "charfield/cyclotomic.hpp"
#include "charfield/root_sum.hpp"

namespace charfield {

// Z_n^x or a subgroup of it, as a sorted element list.
struct ResidueGroup {
    long modulus = 1;
    std::vector<long> elements{0};  // sorted; for modulus 1 the convention is {0}

    static ResidueGroup full(long n);
    static ResidueGroup generated(long n, const std::vector<long>& gens);

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(long a) const;
    bool is_subgroup() const;  // closed under multiplication and contains 1
    bool operator==(const ResidueGroup&) const = default;
};

struct FieldDescriptor {
    long conductor = 1;
    ResidueGroup fixing;  // subgroup of Z_conductor^x
    long degree = 1;      // = phi(conductor) / |fixing|

    bool operator==(const FieldDescriptor&) const = default;
    bool is_subfield_of(const FieldDescriptor& other) const;
    // Recognized constructions this field equals (e.g. "Q", "Q(i)",
    // "Q(sqrt(-2))", "Q(zeta_8)", "Q(zeta_7 + zeta_7^-1)").
    std::vector<std::string> names() const;
    std::string str() const;
};

// H = { s in Z_N^x : galois(s) fixes every generator }.  Generators must be
// expressible at level N.
ResidueGroup stabilizer(const std::vector<Cyclotomic>& gens, long N);

// Conductor-minimal descriptor for the fixed field of H <= Z_N^x.
FieldDescriptor field_reduce(long N, const ResidueGroup& H);

// The field Q(gens) via the Galois correspondence.
FieldDescriptor field_of(const std::vector<Cyclotomic>& gens);
FieldDescriptor field_of(const std::vector<RootSum>& gens);

// Fixed field of the subgroup generated by `subgroup_gens` inside Z_N^x.
FieldDescriptor fixed_field(long N, const std::vector<long>& subgroup_gens);

// The unique degree-d subfield of Q(zeta_{ell^r}) for an odd prime ell;
// requires d | phi(ell^r).
FieldDescriptor unique_subfield(long ell, int r, long d);

// Named constructions.
FieldDescriptor rational_field();
FieldDescriptor gaussian_field();                  // Q(i)
FieldDescriptor cyclotomic_field(long d);          // Q(zeta_d)
FieldDescriptor real_cyclotomic_field(long d);     // Q(zeta_d + zeta_d^-1)
FieldDescriptor quadratic_field(long m);           // Q(sqrt(m)), m squarefree, m != 0, 1
FieldDescriptor sqrt_qstar_field(long p, int n);   // Q(sqrt(q*)), q = p^n, p odd

// Quadratic Gauss sum over F_q (q = p^n, p odd): sum of eta(u) zeta_p^Tr(u)
// over u in F_q^x, eta the quadratic character.  Squares to q*, where
// q* = (-1)^((q-1)/2) q.
RootSum sqrt_qstar_root_sum(long p, int n);
Cyclotomic sqrt_qstar_element(long p, int n);

inline long qstar(long q) { return (q % 4 == 1) ? q : -q; }  // q odd

}  // namespace charfield
