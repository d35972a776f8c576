#include <doctest.h>

#include <numeric>

#include "charfield/gl2_sl2.hpp"
#include "charfield/numtheory.hpp"

using namespace charfield;

TEST_CASE("gl2 shape and degree identity") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        const CharacterTable& t = CharacterTable::gl2(q);
        CHECK(static_cast<long>(t.classes.size()) == q * q - 1);
        CHECK(static_cast<long>(t.chars.size()) == q * q - 1);
        CHECK(t.group_order == (q * q - 1) * (q * q - q));
        long sizes = 0;
        for (const ConjClass& c : t.classes) sizes += c.size;
        CHECK(sizes == t.group_order);
        CHECK(t.degree_identity_ok());
    }
}

TEST_CASE("gl2 orthogonality and value levels") {
    for (long q : {2L, 3L, 4L, 5L, 7L}) {
        const CharacterTable& t = CharacterTable::gl2(q);
        std::string diag;
        CHECK_MESSAGE(t.row_orthogonality_ok(&diag), diag);
        CHECK_MESSAGE(t.column_orthogonality_ok(&diag), diag);
        CHECK_MESSAGE(t.value_levels_ok(&diag), diag);
    }
}

TEST_CASE("sl2 shape, orthogonality and split resolver") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 9L}) {
        const CharacterTable& t = CharacterTable::sl2(q);
        CHECK(t.group_order == q * (q * q - 1));
        long sizes = 0;
        for (const ConjClass& c : t.classes) sizes += c.size;
        CHECK(sizes == t.group_order);
        CHECK(t.degree_identity_ok());
        std::string diag;
        CHECK_MESSAGE(t.row_orthogonality_ok(&diag), diag);
        CHECK_MESSAGE(t.column_orthogonality_ok(&diag), diag);
        CHECK_MESSAGE(t.value_levels_ok(&diag), diag);
        if (q % 2 == 1 && q > 3) CHECK(!t.notes.empty());  // resolver activity recorded
    }
}

TEST_CASE("sl2 split characters agree off the split classes") {
    for (long q : {5L, 7L, 9L, 11L}) {
        const CharacterTable& t = CharacterTable::sl2(q);
        auto idx = [&](const std::string& label) {
            for (std::size_t i = 0; i < t.chars.size(); ++i)
                if (t.chars[i].label == label) return i;
            FAIL("missing character " << label);
            return std::size_t{0};
        };
        const std::size_t w1 = idx("W'"), w2 = idx("W''"), x1 = idx("X'"), x2 = idx("X''");
        for (std::size_t k = 0; k < t.classes.size(); ++k) {
            if (t.classes[k].family == "b") continue;  // the split classes
            CHECK(t.value(w1, k).to_cyclotomic() == t.value(w2, k).to_cyclotomic());
            CHECK(t.value(x1, k).to_cyclotomic() == t.value(x2, k).to_cyclotomic());
        }
    }
}

TEST_CASE("character fields of small groups") {
    // K(GL2(q)) is fixed exactly by {1, q} inside Q(zeta_{q^2-1})
    for (long q : {3L, 4L, 5L, 7L, 8L}) {
        const FieldDescriptor f = CharacterTable::gl2(q).field_generated();
        CHECK(f == fixed_field(q * q - 1, {q}));
    }
    CHECK(CharacterTable::sl2(5).field_generated() == quadratic_field(5));
    CHECK(CharacterTable::gl2(7).field_generated(8) == quadratic_field(2));
    // SL2(9): Q(sqrt(2), sqrt(5)), conductor 40
    const FieldDescriptor f9 = CharacterTable::sl2(9).field_generated();
    CHECK(f9.conductor == 40);
    CHECK(f9.degree == 4);
    CHECK(quadratic_field(2).is_subfield_of(f9));
    CHECK(quadratic_field(5).is_subfield_of(f9));
}

TEST_CASE("order filters") {
    const CharacterTable& t = CharacterTable::gl2(5);
    CHECK(t.field_generated(1) == rational_field());  // identity column = degrees
    CHECK_THROWS_AS(t.field_generated(7), std::invalid_argument);
    const auto orders = t.element_orders();
    CHECK(std::is_sorted(orders.begin(), orders.end()));
    for (long d : orders) CHECK((d == 5 * 4 || (24 % d == 0) || d % 5 == 0));
}

TEST_CASE("first character is trivial") {
    for (long q : {3L, 4L, 5L}) {
        const CharacterTable& t = CharacterTable::gl2(q);
        for (std::size_t k = 0; k < t.classes.size(); ++k)
            CHECK(t.value(0, k).to_cyclotomic() == Cyclotomic(1));
    }
}

TEST_CASE("twists relabel but preserve structure") {
    const CharacterTable& base = CharacterTable::gl2(5);
    for (long twist : {5L, 7L, 11L}) {  // units mod 24
        const CharacterTable& t = CharacterTable::gl2(5, twist);
        CHECK(t.degree_identity_ok());
        CHECK(t.field_generated() == base.field_generated());
        CHECK(t.field_generated(3) == base.field_generated(3));
    }
    CHECK_THROWS(CharacterTable::gl2(5, 2));  // 2 is not a unit mod 24
}
