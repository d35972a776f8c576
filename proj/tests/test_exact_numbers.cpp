#include <doctest.h>

#include "charfield/cyclotomic.hpp"
#include "charfield/numtheory.hpp"
#include "charfield/rational.hpp"
#include "charfield/root_sum.hpp"

using namespace charfield;

TEST_CASE("rationals are canonical") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-3, -6) == make_rational(1, 2));
    CHECK(to_string(make_rational(-1, 3)) == "-1/3");
    CHECK(is_integer(make_rational(6, 3)));
}

TEST_CASE("cyclotomic polynomial basics") {
    for (long n : {1L, 2L, 6L, 8L, 12L, 30L, 105L})
        CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) == totient(n) + 1);
    // Phi_105 is the first with a coefficient other than 0, +-1
    bool has_two = false;
    for (const Int& c : cyclotomic_polynomial(105))
        if (c == -2) has_two = true;
    CHECK(has_two);
}

TEST_CASE("roots of unity satisfy their minimal relations") {
    Cyclotomic s(0);
    for (long e = 0; e < 5; ++e) s += Cyclotomic::root(5, e);
    CHECK(s.is_zero());
    CHECK(Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2) == Cyclotomic(-1));
    const Cyclotomic r = Cyclotomic::root(8, 1) + Cyclotomic::root(8, -1);
    CHECK(r * r == Cyclotomic(2));  // (zeta_8 + zeta_8^-1)^2 = 2
    CHECK(Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1) == Cyclotomic(-1));
}

TEST_CASE("level unification and explicit lowering") {
    const Cyclotomic a = Cyclotomic::root(4, 1);
    const Cyclotomic b = Cyclotomic::root(6, 1);
    const Cyclotomic prod = a * b;  // zeta_12^(3+2)
    CHECK(prod.level() == 12);
    CHECK(prod == Cyclotomic::root(12, 5));
    CHECK(Cyclotomic::root(12, 6) == Cyclotomic(-1));      // equality across levels
    CHECK(Cyclotomic::root(12, 6).at_level(2).level() == 2);
    CHECK_THROWS_AS(Cyclotomic::root(12, 1).at_level(4), std::domain_error);
}

TEST_CASE("rationality detection") {
    const Cyclotomic z = Cyclotomic::root(9, 1) + Cyclotomic::root(9, 4) + Cyclotomic::root(9, 7);
    CHECK(z.is_zero());  // the three primitive 9th roots with cube zeta_3 sum to 0
    const Cyclotomic t = Cyclotomic::root(5, 1) + Cyclotomic::root(5, 2) +
                         Cyclotomic::root(5, 3) + Cyclotomic::root(5, 4);
    CHECK(t.is_rational());
    CHECK(t.rational_value() == Rational(-1));
    CHECK_THROWS_AS(Cyclotomic::root(5, 1).rational_value(), std::domain_error);
}

TEST_CASE("galois action and conjugation") {
    const Cyclotomic a = Cyclotomic::root(7, 3) + Cyclotomic(2) * Cyclotomic::root(7, 5);
    for (long s : units_mod(7)) {
        CHECK(a.galois(s).galois(pow_mod(s, totient(7) - 1, 7)) == a);  // inverse automorphism
    }
    CHECK(a.conjugate() == a.galois(6));
    CHECK_THROWS(a.galois(14));
}

TEST_CASE("root sums agree with canonical arithmetic") {
    RootSum a = RootSum::root(12, 5, make_rational(2));
    a += RootSum::root(12, 1, make_rational(-1, 3));
    RootSum b = RootSum::root(12, 7);
    b += RootSum::rational(Rational(4));
    const Cyclotomic lhs = (a * b).to_cyclotomic();
    const Cyclotomic rhs = a.to_cyclotomic() * b.to_cyclotomic();
    CHECK(lhs == rhs);
    CHECK(a.conjugate().to_cyclotomic() == a.to_cyclotomic().conjugate());
    CHECK(a.galois(5).to_cyclotomic() == a.to_cyclotomic().galois(5));
}

TEST_CASE("root accumulators reduce once, correctly") {
    RootAccum acc(24);
    const RootSum a = RootSum::root(8, 3);
    const RootSum b = RootSum::root(12, 5);
    acc.add_product(a, b, Rational(3));
    acc.add(RootSum::rational(Rational(1)), Rational(-2));
    const Cyclotomic expect =
        Cyclotomic(3) * (a.to_cyclotomic() * b.to_cyclotomic()) - Cyclotomic(2);
    CHECK(acc.value() == expect);
}

TEST_CASE("keys give a usable total order") {
    CHECK(Cyclotomic::root(5, 1).key() != Cyclotomic::root(5, 2).key());
    CHECK(Cyclotomic::root(5, 1).key() == (Cyclotomic::root(5, 1) + Cyclotomic(0)).key());
}
