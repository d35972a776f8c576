#include <doctest.h>

#include <set>

#include "charfield/theorems.hpp"

using namespace charfield;

namespace {

ClaimParams params(long q, long ell = 0, int r = 0, long d = 0, int m = 2, long twist = 1) {
    ClaimParams p;
    p.q = q;
    p.ell = ell;
    p.r = r;
    p.d = d;
    p.m = m;
    p.twist = twist;
    return p;
}

}  // namespace

TEST_CASE("claim ids and aliases") {
    CHECK(all_claims().size() == 13);
    CHECK(canonical_claim("Lemma3.1") == "L3.1");
    CHECK(canonical_claim("K8-table") == "K8");
    CHECK(canonical_claim("2r-remark") == "2r");
    CHECK(canonical_claim("Thm4") == "Thm4");
    CHECK_THROWS_AS(canonical_claim("Thm7"), std::invalid_argument);
}

TEST_CASE("predictions") {
    CHECK(predict("Thm4", params(7, 3, 1)) == cyclotomic_field(3));
    CHECK(predict("Thm4", params(5, 3, 1)) == rational_field());  // real subfield of Q(zeta_3)
    CHECK(predict("Thm4", params(3, 3, 1)) == rational_field());  // q = 0 case
    CHECK(predict("Thm6", params(5, 5, 1)) == quadratic_field(5));
    CHECK(predict("K8", params(13)) == gaussian_field());         // 13 = 5 mod 8
    CHECK(predict("K8", params(11)) == quadratic_field(-2));
    CHECK(predict("L1", params(7, 0, 0, 6)) == cyclotomic_field(6));
    CHECK_THROWS_AS(predict("Thm4", params(2, 5, 1)), std::invalid_argument);  // 2 mod 5
    CHECK_THROWS_AS(predict("Thm2", params(5, 2, 3)), std::invalid_argument);  // even ell
}

TEST_CASE("single verifications") {
    auto expect = [](const VerificationResult& r, Status s) {
        CHECK(r.status == s);
        if (s == Status::Pass) CHECK(r.computed == r.predicted);
    };
    expect(verify("Thm4", params(7, 3, 1)), Status::Pass);
    expect(verify("Thm4", params(5, 3, 1)), Status::Pass);
    expect(verify("Thm4", params(3, 3, 1)), Status::Pass);
    expect(verify("L2", params(3, 0, 0, 8)), Status::Pass);
    CHECK(verify("L2", params(3, 0, 0, 8)).computed == quadratic_field(-2));
    expect(verify("Thm5", params(4)), Status::Pass);
    CHECK(verify("Thm5", params(4)).computed == quadratic_field(5));
    expect(verify("Thm6", params(5, 5, 1)), Status::Pass);
    expect(verify("Thm6", params(9, 3, 1)), Status::Pass);
    CHECK(verify("Thm6", params(9, 3, 1)).computed == rational_field());  // 9* = 9
    expect(verify("K4", params(5)), Status::Pass);
    expect(verify("K8", params(7)), Status::Pass);
    expect(verify("smalld", params(9, 0, 0, 5)), Status::Pass);
    expect(verify("2r", params(7, 2, 3)), Status::Pass);
    expect(verify("L1", params(7, 0, 0, 3)), Status::Pass);
    expect(verify("Thm1", params(5)), Status::Pass);
    expect(verify("Thm3", params(5)), Status::Pass);
    // no element of the required order
    CHECK(verify("Thm4", params(2, 5, 2)).status == Status::Skipped);
    CHECK(verify("Thm6", params(4, 7, 1)).status == Status::Skipped);
}

TEST_CASE("theorem 2 at rank 3") {
    const VerificationResult a = verify("Thm2", params(2, 7, 1, 0, 3));
    CHECK(a.status == Status::Pass);
    CHECK(a.computed == quadratic_field(-7));  // degree 2 = phi(7)/ord_7(2)
    const VerificationResult b = verify("Thm2", params(3, 13, 1, 0, 3));
    CHECK(b.status == Status::Pass);
    CHECK(b.computed == unique_subfield(13, 1, 4));  // degree 4 = phi(13)/3
    CHECK(b.computed.degree == 4);
    CHECK(b.computed.conductor == 13);
}

TEST_CASE("the single-product lemma fails where the top orbit sum vanishes") {
    const VerificationResult r = verify("L3.1", params(7, 3, 2));
    CHECK(r.status == Status::Fail);
    CHECK(r.predicted == quadratic_field(-3));
    CHECK(r.computed == rational_field());  // the product is 0
    CHECK(!r.notes.empty());
    CHECK(verify("L3.1", params(2, 3, 2)).status == Status::Pass);
    CHECK(verify("L3.1", params(4, 5, 1)).status == Status::Pass);
}

TEST_CASE("sweeps are deterministic and cover every claim") {
    const auto a = sweep({"ALL"}, 5, 9, 2);
    const auto b = sweep({"ALL"}, 5, 9, 2);
    REQUIRE(a.size() == b.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].claim == b[i].claim);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].computed == b[i].computed);
        seen.insert(a[i].claim);
    }
    for (const std::string& c : all_claims())
        if (c != "2r")  // needs ell^r >= 8
            CHECK(seen.count(c) == 1);
    CHECK(sweep({"2r"}, 13, 27, 2).size() > 0);
}

TEST_CASE("verification is independent of the generator choice") {
    for (long twist : {1L, 5L, 7L, 11L}) {
        const VerificationResult r = verify("Thm4", params(5, 3, 1, 0, 2, twist));
        CHECK(r.status == Status::Pass);
        CHECK(r.computed == rational_field());
    }
}

TEST_CASE("prime power enumeration") {
    CHECK(prime_powers_up_to(16) ==
          std::vector<long>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
}
