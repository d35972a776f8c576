#pragma once

// Character tables of GL2(F_q) and SL2(F_q), exact.
//
// Classes and characters are labeled by discrete logs relative to a fixed
// generator g of F_{q^2}^x (eps := g^(q+1) generates F_q^x, z := g^(q-1)
// generates the norm-one subgroup C of order q+1).  Values are sparse sums of
// roots of unity; orthogonality and field computations reduce to canonical
// form only once per accumulated sum.
//
// For odd q the four characters of SL2 that split off the quadratic-twist
// restrictions carry sign ambiguities on the split unipotent classes; they
// are fixed by an explicit resolver that tries every sign assignment and
// keeps the unique one (up to the W'/W'' and X'/X'' labeling convention)
// satisfying exact row and column orthogonality.  Resolver activity is
// recorded in `notes`.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "charfield/galois_fields.hpp"
#include "charfield/root_sum.hpp"

namespace charfield {

enum class Group { GL2, SL2 };

struct ConjClass {
    std::string family;        // "a", "b", "c", "d" and for SL2 "I", "-I"
    std::vector<long> params;  // discrete-log labels (see builder)
    long size = 1;
    long order = 1;  // element order
    std::string label;
};

struct CharId {
    std::string family;  // "U", "V", "W", "X", "W'", "W''", "X'", "X''"
    std::vector<long> params;
    long degree = 1;
    std::string label;
};

class CharacterTable {
public:
    // Cached, immutable after construction.  `twist` re-bases every label on
    // the alternate generator g^twist (twist a unit mod q^2 - 1); it permutes
    // which group element each label denotes but must not change any derived
    // field, which is what the generator-independence tests exercise.
    static const CharacterTable& gl2(long q, long twist = 1);
    static const CharacterTable& sl2(long q, long twist = 1);

    Group group;
    long q = 0, p = 0;
    int n = 0;
    long group_order = 0;
    std::vector<ConjClass> classes;
    std::vector<CharId> chars;
    std::vector<std::string> notes;

    const RootSum& value(std::size_t chi, std::size_t cls) const { return values_[chi][cls]; }

    // sum_c size(c) chi(c) conj(chi'(c)) = |G| [chi = chi'], all pairs.
    bool row_orthogonality_ok(std::string* diag = nullptr) const;
    // sum_chi chi(c) conj(chi(c')) = (|G|/size(c)) [c = c'], all pairs.
    bool column_orthogonality_ok(std::string* diag = nullptr) const;
    // sum_chi chi(1)^2 = |G| and class sizes sum to |G|.
    bool degree_identity_ok() const;
    // every chi(g) lies in Q(zeta_ord(g)).
    bool value_levels_ok(std::string* diag = nullptr) const;

    // K(G) and K_d(G).  Throws std::invalid_argument("no element of order d")
    // when the order filter matches nothing.
    FieldDescriptor field_generated() const;
    FieldDescriptor field_generated(long order_d) const;

    std::vector<long> element_orders() const;  // sorted, distinct
    // (family, element order) -> number of classes.
    std::map<std::pair<std::string, long>, long> class_census() const;

private:
    friend struct TableBuilder;
    CharacterTable() = default;

    std::vector<std::vector<RootSum>> values_;
};

}  // namespace charfield
