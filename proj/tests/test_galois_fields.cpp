#include <doctest.h>

#include "charfield/galois_fields.hpp"
#include "charfield/numtheory.hpp"

using namespace charfield;

TEST_CASE("named constructions are conductor-minimal and recognized") {
    CHECK(rational_field().conductor == 1);
    CHECK(rational_field().degree == 1);
    CHECK(gaussian_field() == quadratic_field(-1));
    CHECK(cyclotomic_field(1) == rational_field());
    CHECK(cyclotomic_field(2) == rational_field());  // zeta_2 = -1
    CHECK(real_cyclotomic_field(3) == rational_field());
    CHECK(real_cyclotomic_field(5) == quadratic_field(5));
    CHECK(quadratic_field(-3) == cyclotomic_field(3));
    CHECK(quadratic_field(2).conductor == 8);
    CHECK(quadratic_field(-2).conductor == 8);
    CHECK(quadratic_field(2) != quadratic_field(-2));
    CHECK_THROWS(quadratic_field(4));  // not squarefree
}

TEST_CASE("field_of through the Galois correspondence") {
    CHECK(field_of({Cyclotomic::root(5, 1) + Cyclotomic::root(5, -1)}) == quadratic_field(5));
    CHECK(field_of({Cyclotomic::root(7, 1) + Cyclotomic::root(7, 2) + Cyclotomic::root(7, 4)}) ==
          quadratic_field(-7));
    CHECK(field_of({Cyclotomic(17)}) == rational_field());
    CHECK(field_of({Cyclotomic::root(8, 1)}) == cyclotomic_field(8));
    // a sum of roots that happens to vanish generates only Q
    CHECK(field_of({Cyclotomic::root(9, 1) + Cyclotomic::root(9, 7) + Cyclotomic::root(9, 4)}) ==
          rational_field());
}

TEST_CASE("fixed fields and unique subfields") {
    // <2> has order 3 in Z_7^x, so the fixed field is the quadratic subfield
    CHECK(fixed_field(7, {2}) == quadratic_field(-7));
    CHECK(fixed_field(7, {3}) == rational_field());
    CHECK(unique_subfield(7, 1, 2) == quadratic_field(-7));
    CHECK(unique_subfield(7, 1, 6) == cyclotomic_field(7));
    CHECK(unique_subfield(3, 2, 2) == quadratic_field(-3));  // inside Q(zeta_9)
    CHECK_THROWS(unique_subfield(7, 1, 4));  // 4 does not divide 6
}

TEST_CASE("subfield relation") {
    CHECK(rational_field().is_subfield_of(quadratic_field(5)));
    CHECK(quadratic_field(5).is_subfield_of(cyclotomic_field(5)));
    CHECK(!cyclotomic_field(5).is_subfield_of(quadratic_field(5)));
    CHECK(quadratic_field(2).is_subfield_of(cyclotomic_field(8)));
    CHECK(!quadratic_field(5).is_subfield_of(cyclotomic_field(8)));
}

TEST_CASE("stabilizers are subgroups and reduction is idempotent") {
    const std::vector<Cyclotomic> gens{Cyclotomic::root(20, 1) + Cyclotomic::root(20, 9)};
    const ResidueGroup h = stabilizer(gens, 20);
    CHECK(h.is_subgroup());
    const FieldDescriptor f = field_reduce(20, h);
    CHECK(field_reduce(f.conductor, f.fixing) == f);
    CHECK(f == field_of(gens));
}

TEST_CASE("gauss sums square to q*") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        const Cyclotomic g = sqrt_qstar_element(p, 1);
        CHECK(g * g == Cyclotomic(qstar(p)));
        CHECK(field_of({g}) == sqrt_qstar_field(p, 1));
    }
    // q = 9: 9* = 9, so the Gauss sum is rational and the field is Q
    const Cyclotomic g9 = sqrt_qstar_element(3, 2);
    CHECK(g9 * g9 == Cyclotomic(9));
    CHECK(sqrt_qstar_field(3, 2) == rational_field());
    CHECK(sqrt_qstar_field(5, 1) == quadratic_field(5));
    CHECK(sqrt_qstar_field(7, 1) == quadratic_field(-7));
}

TEST_CASE("descriptor names are stable") {
    const auto names = quadratic_field(-3).names();
    CHECK(std::find(names.begin(), names.end(), "Q(zeta_3)") != names.end());
    CHECK(std::find(names.begin(), names.end(), "Q(sqrt(-3))") != names.end());
    CHECK(rational_field().names() == std::vector<std::string>{"Q"});
}
