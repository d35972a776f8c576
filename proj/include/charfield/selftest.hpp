#pragma once

// Cross-cutting invariant suite: cyclotomic polynomial division oracle,
// Galois action laws, Gauss-sum squares, stabilizer closure, descriptor
// canonicalization idempotence, table orthogonality spot checks and
// generator-choice independence of a full verification.

#include <iosfwd>

namespace charfield {

// Runs every check, writing one line per check ("ok <name>" / "FAIL <name>";
// only failures when quiet).  Returns the number of failed checks.
int run_selftest(std::ostream& out, bool quiet = false);

}  // namespace charfield
