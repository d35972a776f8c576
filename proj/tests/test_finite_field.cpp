#include <doctest.h>

#include <numeric>

#include "charfield/finite_field.hpp"
#include "charfield/numtheory.hpp"

using namespace charfield;

namespace {

// (1/d) sum_{e|d} mu(e) q^(d/e)
long irreducible_count(long q, int d) {
    long s = 0;
    for (long e : divisors(d)) {
        long t = 1;
        for (int i = 0; i < d / e; ++i) t *= q;
        s += moebius(e) * t;
    }
    return s / d;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
    FqCtx f9(3, 2);
    CHECK(f9.q() == 9);
    const FqElem g = f9.generator();
    CHECK(g.order() == 8);
    CHECK(g.pow(8) == f9.one());
    CHECK(g * g.inverse() == f9.one());
    CHECK((g + (-g)).is_zero());
    for (long i = 0; i < 9; ++i) CHECK(f9.from_index(i).index() == i);
    CHECK(f9.dlog(g.pow(5)) == 5);
}

TEST_CASE("frobenius, trace and norm") {
    FqCtx f8(2, 3);
    const FqElem g = f8.generator();
    CHECK(g.frobenius() == g * g);
    CHECK(g.frobenius(3) == g);
    // trace to F_2 lands in the prime field: x + x^2 + x^4 is frobenius-fixed
    const FqElem tr = g.trace_to(1);
    CHECK(tr.frobenius() == tr);
    // the norm to F_2 of a nonzero element is 1
    CHECK(g.norm_to(1) == f8.one());
}

TEST_CASE("quadratic character is multiplicative") {
    FqCtx f7(7, 1);
    for (long a = 1; a < 7; ++a)
        for (long b = 1; b < 7; ++b)
            CHECK(f7.from_int(a * b).quadratic_character() ==
                  f7.from_int(a).quadratic_character() * f7.from_int(b).quadratic_character());
    CHECK(f7.from_int(-1).quadratic_character() == -1);  // 7 = 3 mod 4
}

TEST_CASE("irreducible enumeration matches the counting formula") {
    for (long q : {2L, 3L, 4L, 5L}) {
        auto [p, n] = prime_power_split(q);
        FqCtx ctx(p, n);
        for (int d = 1; d <= 3; ++d) {
            const auto polys = irreducible_polynomials(d, ctx);
            CHECK(static_cast<long>(polys.size()) == irreducible_count(q, d));
            for (const FqPoly& f : polys) CHECK(is_irreducible(f));
        }
    }
}

TEST_CASE("root orders partition the extension group") {
    // over F_q, roots of degree-d irreducibles (excluding t) cover F_{q^d}
    // minus the proper-subfield elements; orders must divide q^d - 1
    FqCtx f3(3, 1);
    long total = 0;
    for (const FqPoly& f : irreducible_polynomials(2, f3)) {
        if (f.c[0].is_zero()) continue;
        const long ord = root_order(f);
        CHECK(8 % ord == 0);
        total += 1;
    }
    CHECK(total == 3);  // (9 - 3)/2 polynomials of degree 2 with nonzero roots
}

TEST_CASE("contexts are deterministic") {
    FqCtx a(5, 2), b(5, 2);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.generator().index() == b.generator().index());
}
