#pragma once

// One verifier per claim: both sides of each stated field identity are
// computed as canonical descriptors and compared exactly.
//
// Claim ids: Thm1, Thm2, Thm3, Thm4, Thm5, Thm6, L1, L2, L3.1, K4, K8,
// smalld, 2r (aliases: Lemma3.1, K8-table, 2r-remark).  The computed side
// always comes from character values (GL2/SL2 tables, or the Green value
// generators for m >= 3); the predicted side from the named constructions.

#include <string>
#include <vector>

#include "charfield/galois_fields.hpp"

namespace charfield {

enum class Status { Pass, Fail, Skipped };

struct ClaimParams {
    long q = 0;
    long ell = 0;
    int r = 0;
    long d = 0;      // order filter (L1, L2, smalld)
    int m = 2;
    long twist = 1;  // alternate finite-field generator, for independence tests
};

struct VerificationResult {
    std::string claim;
    ClaimParams params;
    FieldDescriptor computed;
    FieldDescriptor predicted;
    Status status = Status::Skipped;
    std::vector<std::string> notes;

    bool ok() const { return status != Status::Fail; }
};

const std::vector<std::string>& all_claims();
std::string canonical_claim(const std::string& id);  // resolves aliases; throws on unknown

// Paper-side field for a claim; throws std::invalid_argument when the claim
// has no applicable case for the parameters.
FieldDescriptor predict(const std::string& claim, const ClaimParams& params);

VerificationResult verify(const std::string& claim, const ClaimParams& params);

// Deterministic parameter sweep (lexicographic per claim).  Claims may be a
// subset of all_claims(); {"ALL"} expands to every claim.
std::vector<VerificationResult> sweep(const std::vector<std::string>& claims, long q_max,
                                      long ellr_max, int m_max);

std::vector<long> prime_powers_up_to(long n);

}  // namespace charfield
