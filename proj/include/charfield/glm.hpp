#pragma once

// Conjugacy-class machinery for GL_m(F_q) and the fields generated by
// character values, for general m at desk scale.
//
// Classes are parameterized by distinct monic irreducible polynomials f_i
// (f_i != t) with multiplicities k_i and partitions lambda_i of k_i, subject
// to sum k_i deg(f_i) = m.  Character values at elements of prime-power order
// ell^r reduce to products of orbit sums sum_t zeta_{ell^a}^{i q^t}; the
// generator enumeration ranges i over all residues mod ell^a, since a
// character need not be faithful on the cyclic group generated by a root.

#include <string>
#include <vector>

#include "charfield/cyclotomic.hpp"
#include "charfield/galois_fields.hpp"

namespace charfield {

std::vector<std::vector<long>> partitions_of(long k);  // weakly decreasing parts

struct ClassFactor {
    std::vector<long> poly;        // monic irreducible over F_q, element indices, low first
    int degree = 1;                // deg(poly)
    long root_order = 1;           // multiplicative order of a root in F_{q^degree}
    std::vector<long> partition;   // partition of the multiplicity k_i
};

struct ClassType {
    std::vector<ClassFactor> factors;  // pairwise distinct polynomials
    long element_order = 1;  // lcm of root orders times the unipotent p-power
    std::string str() const;
};

// All conjugacy classes of GL_m(F_q).  Element orders carry the p-power factor
// p^ceil(log_p max(lambda)) from the Jordan blocks.
std::vector<ClassType> class_types(int m, long q);

// omega_d(r) = sum_{k<d} zeta_{q^d-1}^{r q^k}, exact at level q^d - 1.
Cyclotomic omega(int d, long r, long q);

// K(GL_m(F_q)) = Q({omega_d(r) : d <= m, r a unit mod q^d - 1}).
FieldDescriptor k_glm(int m, long q);

// Whether GL_m(F_q) has an element of order ell^r.
bool exists_order(int m, long q, long ell, int r);

// Products prod_{a in A} sum_{t < ord_{ell^a}(q)} zeta_{ell^a}^{i_a q^t} over
// every multiset A of levels containing r whose degrees fit in m, and every
// choice of residues i_a mod ell^a.  Requires exists_order and ell != p.
std::vector<Cyclotomic> order_ellr_value_generators(int m, long q, long ell, int r);

// K_{ell^r}(GL_m(F_q)).  For odd ell != p the value-generator field, the fixed
// field of <tau_q> and the degree-selected subfield are all computed and must
// agree.  ell = p gives Q; ell^r in {2, 4} follows the parity of q mod 4;
// 2^r with r > 2 is only resolved for m = 2 (via the GL2 table).
FieldDescriptor k_ellr_glm(int m, long q, long ell, int r);

// Single-product check: whether Q(prod_a sum_t zeta_{ell^a}^{i_a q^t}) with a
// unit top index i_r equals the fixed field of <tau_q> in Q(zeta_{ell^r}) and
// the product has phi(ell^r)/ord_{ell^r}(q) distinct Galois conjugates.  The
// identity fails whenever ell divides ord_{ell^r}(q) and the fixed field is
// bigger than Q: the top orbit sum is then 0.
bool lemma31_check(long q, long ell, int r, const std::vector<long>& i_tuple);

}  // namespace charfield
