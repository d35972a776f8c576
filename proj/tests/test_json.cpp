#include <doctest.h>

#include <json.hpp>

#include "charfield/json_io.hpp"

using namespace charfield;

TEST_CASE("field descriptors round-trip") {
    for (const FieldDescriptor& f :
         {rational_field(), gaussian_field(), quadratic_field(-7), cyclotomic_field(8),
          CharacterTable::gl2(5).field_generated()}) {
        CHECK(field_from_json_string(to_json_string(f)) == f);
    }
}

TEST_CASE("cyclotomic values round-trip exactly") {
    const Cyclotomic v =
        Cyclotomic::root(12, 5) * Rational(-7, 3) + Cyclotomic::root(12, 1) + Cyclotomic(2);
    CHECK(cyclotomic_from_json_string(to_json_string(v)) == v);
}

TEST_CASE("table dumps round-trip to the same field") {
    for (long q : {3L, 4L, 5L}) {
        const CharacterTable& t = CharacterTable::gl2(q);
        const std::string dump = to_json_string(t);
        CHECK(field_from_table_json_string(dump) == t.field_generated());
        CHECK(field_from_table_json_string(dump, 3) == t.field_generated(3));
    }
    const CharacterTable& s = CharacterTable::sl2(5);
    CHECK(field_from_table_json_string(to_json_string(s)) == s.field_generated());
}

TEST_CASE("json output is deterministic and structured") {
    const std::string a = to_json_string(CharacterTable::sl2(7));
    const std::string b = to_json_string(CharacterTable::sl2(7));
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j.at("group") == "sl2");
    CHECK(j.at("q") == 7);
    CHECK(j.at("p") == 7);
    CHECK(j.at("classes").size() == j.at("values").at(0).size());
    CHECK(j.at("characters").size() == j.at("values").size());
    // exact data only: every coefficient is a rational string, never a float
    for (const auto& c : j.at("values").at(1).at(0).at("coeffs")) CHECK(c.is_string());
}

TEST_CASE("verification results serialize with status and notes") {
    ClaimParams p;
    p.q = 7;
    p.ell = 3;
    p.r = 2;
    const auto j = nlohmann::json::parse(to_json_string(verify("L3.1", p)));
    CHECK(j.at("status") == "fail");
    CHECK(j.at("claim") == "L3.1");
    CHECK(!j.at("notes").empty());
    CHECK(j.at("computed").at("degree") == 1);
    CHECK(j.at("predicted").at("degree") == 2);

    p = ClaimParams{};
    p.q = 4;
    const auto ok = nlohmann::json::parse(to_json_string(verify("Thm5", p)));
    CHECK(ok.at("status") == "pass");
    CHECK(ok.at("computed") == ok.at("predicted"));
}

TEST_CASE("sweep reports carry a summary") {
    const auto rs = sweep({"Thm4"}, 5, 9, 2);
    const auto j = nlohmann::json::parse(to_json_string(rs));
    CHECK(j.at("results").size() == rs.size());
    const auto& s = j.at("summary");
    CHECK(s.at("total").get<long>() == static_cast<long>(rs.size()));
    CHECK(s.at("pass").get<long>() + s.at("fail").get<long>() + s.at("skipped").get<long>() ==
          s.at("total").get<long>());
}

TEST_CASE("text renderings mention the essentials") {
    const std::string t = to_text(CharacterTable::sl2(4));
    CHECK(t.find("SL2(F_4)") != std::string::npos);
    CHECK(t.find("classes (5)") != std::string::npos);
    const std::string f = to_text(quadratic_field(5));
    CHECK(f.find("sqrt(5)") != std::string::npos);
}
