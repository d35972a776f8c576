#include <doctest.h>

#include <numeric>
#include <set>

#include "charfield/gl2_sl2.hpp"
#include "charfield/glm.hpp"
#include "charfield/numtheory.hpp"

using namespace charfield;

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    for (const auto& lambda : partitions_of(6)) {
        CHECK(std::is_sorted(lambda.rbegin(), lambda.rend()));
        CHECK(std::accumulate(lambda.begin(), lambda.end(), 0L) == 6);
    }
}

TEST_CASE("class type counts match the rank-2 tables") {
    for (long q : {2L, 3L, 4L, 5L}) {
        CHECK(static_cast<long>(class_types(2, q).size()) == q * q - 1);
    }
    // GL_1(F_q) is abelian with q - 1 classes
    for (long q : {2L, 3L, 5L, 9L}) CHECK(static_cast<long>(class_types(1, q).size()) == q - 1);
    // GL_3(F_2) has 6 conjugacy classes
    CHECK(class_types(3, 2).size() == 6);
}

TEST_CASE("class element orders at rank 2 match the character table") {
    for (long q : {3L, 4L, 5L, 7L}) {
        std::set<long> from_types;
        for (const ClassType& t : class_types(2, q)) from_types.insert(t.element_order);
        const auto table_orders = CharacterTable::gl2(q).element_orders();
        CHECK(from_types == std::set<long>(table_orders.begin(), table_orders.end()));
    }
}

TEST_CASE("orbit sums are fixed by the frobenius automorphism") {
    for (long q : {3L, 4L, 5L}) {
        for (int d : {1, 2}) {
            long n = 1;
            for (int i = 0; i < d; ++i) n *= q;
            for (long r : {1L, 2L}) {
                const Cyclotomic w = omega(d, r, q);
                CHECK(w.galois(mod_reduce(q, n - 1)) == w);
            }
        }
    }
}

TEST_CASE("k_glm at rank 2 equals the table field") {
    for (long q : {2L, 3L, 4L, 5L, 7L}) {
        CHECK(k_glm(2, q) == CharacterTable::gl2(q).field_generated());
    }
}

TEST_CASE("existence of prime-power orders") {
    CHECK(exists_order(2, 7, 3, 1));       // 3 | 7 - 1
    CHECK(exists_order(2, 7, 2, 3));       // 8 | 48
    CHECK(!exists_order(2, 7, 3, 2));      // ord_9(7) = 3 > 2
    CHECK(exists_order(3, 7, 3, 2));
    CHECK(exists_order(2, 7, 7, 1));       // unipotent
    CHECK(!exists_order(2, 7, 7, 2));
    CHECK(exists_order(8, 7, 7, 2));       // needs rank > 7
}

TEST_CASE("k_ellr_glm three-route agreement") {
    CHECK(k_ellr_glm(2, 7, 3, 1) == quadratic_field(-3));
    CHECK(k_ellr_glm(3, 7, 3, 2) == quadratic_field(-3));
    CHECK(k_ellr_glm(2, 5, 3, 1) == rational_field());   // 5 = -1 mod 3
    CHECK(k_ellr_glm(2, 4, 5, 1) == quadratic_field(5));  // ord_5(4) = 2
    CHECK(k_ellr_glm(3, 2, 7, 1) == quadratic_field(-7));
    CHECK(k_ellr_glm(2, 7, 7, 1) == rational_field());   // ell = p
    CHECK(k_ellr_glm(2, 5, 2, 2) == gaussian_field());
    CHECK(k_ellr_glm(2, 7, 2, 2) == rational_field());
    CHECK(k_ellr_glm(2, 7, 2, 3) == quadratic_field(2));
    CHECK_THROWS_AS(k_ellr_glm(4, 17, 2, 3), std::invalid_argument);  // 2-power, rank > 2
    CHECK_THROWS_AS(k_ellr_glm(2, 7, 3, 2), std::invalid_argument);   // no such element
}

TEST_CASE("single-product identity holds exactly when the top orbit sum survives") {
    CHECK(lemma31_check(2, 3, 2, {0, 1}));
    CHECK(lemma31_check(4, 5, 1, {1}));
    CHECK(lemma31_check(2, 7, 1, {1}));
    CHECK(lemma31_check(3, 5, 2, {0, 1}));
    // ord_9(7) = 3 is divisible by 3: zeta_9 + zeta_9^7 + zeta_9^4 = 0
    CHECK(!lemma31_check(7, 3, 2, {0, 1}));
    CHECK(!lemma31_check(7, 3, 2, {1, 1}));
    CHECK(!lemma31_check(4, 3, 2, {0, 1}));
    CHECK_THROWS_AS(lemma31_check(7, 3, 2, {0, 3}), std::invalid_argument);  // i_r not a unit
    CHECK_THROWS_AS(lemma31_check(7, 2, 2, {0, 1}), std::invalid_argument);  // ell must be odd
    CHECK_THROWS_AS(lemma31_check(3, 3, 1, {1}), std::invalid_argument);     // q not coprime
}

TEST_CASE("generator lists are deduplicated and at the top level") {
    const auto gens = order_ellr_value_generators(2, 7, 3, 1);
    CHECK(!gens.empty());
    for (const Cyclotomic& g : gens) CHECK(3 % g.level() == 0);
    CHECK(field_of(gens) == quadratic_field(-3));
}
