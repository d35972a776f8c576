#include "charfield/selftest.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "charfield/cyclotomic.hpp"
#include "charfield/galois_fields.hpp"
#include "charfield/gl2_sl2.hpp"
#include "charfield/numtheory.hpp"
#include "charfield/theorems.hpp"

namespace charfield {

int run_selftest(std::ostream& out, bool quiet) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        if (!ok) ++failures;
        if (!ok || !quiet) out << (ok ? "ok   " : "FAIL ") << name << "\n";
    };

    // cyclotomic polynomials vs. the division oracle prod_{d|n} Phi_d = x^n - 1
    {
        bool ok = true;
        for (long n = 1; n <= 60; ++n) {
            std::vector<Int> prod{1};
            for (long d : divisors(n)) {
                const auto& phi = cyclotomic_polynomial(d);
                std::vector<Int> next(prod.size() + phi.size() - 1, Int(0));
                for (std::size_t i = 0; i < prod.size(); ++i)
                    for (std::size_t k = 0; k < phi.size(); ++k) next[i + k] += prod[i] * phi[k];
                prod = std::move(next);
            }
            std::vector<Int> target(n + 1, Int(0));
            target[0] = -1;
            target[n] = 1;
            ok = ok && prod == target;
        }
        check("Phi_n division oracle, n <= 60", ok);
    }

    // Galois action: multiplicative in s, ring homomorphism on elements
    {
        bool ok = true;
        const Cyclotomic a = Cyclotomic::root(36, 5) + Cyclotomic::root(36, 2) * Rational(3, 7);
        const Cyclotomic b = Cyclotomic::root(36, 11) - Cyclotomic(2);
        for (long s : units_mod(36))
            for (long t : units_mod(36)) {
                ok = ok && a.galois(s).galois(t) == a.galois(mul_mod(s, t, 36));
                ok = ok && (a + b).galois(s) == a.galois(s) + b.galois(s);
                ok = ok && (a * b).galois(s) == a.galois(s) * b.galois(s);
            }
        check("Galois action laws at level 36", ok);
    }

    // Gauss-sum squares: g^2 = q* for q = p^n, p <= 23, n <= 2
    {
        bool ok = true;
        for (long p = 3; p <= 23; p += 2) {
            if (!is_prime(p)) continue;
            for (int n = 1; n <= 2; ++n) {
                long q = 1;
                for (int i = 0; i < n; ++i) q *= p;
                const Cyclotomic g = sqrt_qstar_element(p, n);
                ok = ok && g * g == Cyclotomic(qstar(q));
            }
        }
        check("Gauss-sum squares g^2 = q*, p <= 23, n <= 2", ok);
    }

    // stabilizer subgroups are subgroups; field_reduce is idempotent
    {
        bool ok = true;
        for (long q : {4L, 5L, 7L, 9L}) {
            const FieldDescriptor f = CharacterTable::gl2(q).field_generated();
            ok = ok && f.fixing.is_subgroup();
            ok = ok && field_reduce(f.conductor, f.fixing) == f;
        }
        check("stabilizer closure and field_reduce idempotence", ok);
    }

    // table integrity spot checks
    for (long q : {4L, 5L, 7L}) {
        const CharacterTable& t = CharacterTable::gl2(q);
        check("GL2(" + std::to_string(q) + ") orthogonality",
              t.degree_identity_ok() && t.row_orthogonality_ok() && t.column_orthogonality_ok() &&
                  t.value_levels_ok());
    }
    for (long q : {4L, 7L}) {
        const CharacterTable& t = CharacterTable::sl2(q);
        check("SL2(" + std::to_string(q) + ") orthogonality",
              t.degree_identity_ok() && t.row_orthogonality_ok() && t.column_orthogonality_ok() &&
                  t.value_levels_ok());
    }

    // generator-choice independence of one full verification
    {
        ClaimParams pr;
        pr.q = 7;
        pr.ell = 3;
        pr.r = 1;
        const VerificationResult base = verify("Thm4", pr);
        bool ok = base.status == Status::Pass;
        for (long twist : units_mod(48)) {
            pr.twist = twist;
            const VerificationResult res = verify("Thm4", pr);
            ok = ok && res.status == base.status && res.computed == base.computed &&
                 res.predicted == base.predicted;
        }
        check("generator-choice independence (order-3 field in GL2(7), all twists)", ok);
    }

    out << (failures == 0 ? "selftest: all checks passed\n"
                          : "selftest: " + std::to_string(failures) + " check(s) failed\n");
    return failures;
}

}  // namespace charfield
