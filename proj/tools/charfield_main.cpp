// Command-line front end: character tables of GL2/SL2 over finite fields,
// character-value field queries (including GL_m via class types), and
// verification sweeps for the field identities, with deterministic text or
// JSON output.
//
// Exit status: 0 = success / all checks pass, 1 = a verification failed,
// 2 = usage error, 3 = a desk-scale bound was exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "charfield/config.hpp"
#include "charfield/galois_fields.hpp"
#include "charfield/gl2_sl2.hpp"
#include "charfield/glm.hpp"
#include "charfield/json_io.hpp"
#include "charfield/numtheory.hpp"
#include "charfield/selftest.hpp"
#include "charfield/theorems.hpp"

namespace {

using namespace charfield;

constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitBound = 3;

void apply_env_bounds() {
    if (const char* v = std::getenv("CHARFIELD_MAX_LEVEL")) bounds().max_level = std::atol(v);
    if (const char* v = std::getenv("CHARFIELD_MAX_Q")) bounds().max_q = std::atol(v);
    if (const char* v = std::getenv("CHARFIELD_MAX_M")) bounds().max_m = std::atoi(v);
}

struct QOpt {
    long q = 0, p = 0;
    int n = 0;

    // resolves --q / --p --n into a prime power and echoes the factorization
    long resolve() {
        if (q == 0 && p == 0) throw CLI::ValidationError("give --q or --p/--n");
        if (q != 0 && p != 0) throw CLI::ValidationError("give --q or --p/--n, not both");
        if (q == 0) {
            if (n < 1) throw CLI::ValidationError("--p needs --n >= 1");
            q = 1;
            for (int i = 0; i < n; ++i) q *= p;
        }
        const auto [pp, nn] = prime_power_split(q);  // throws if not a prime power
        p = pp;
        n = nn;
        return q;
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--q", q, "field size, a prime power");
        cmd->add_option("--p", p, "field characteristic (with --n)");
        cmd->add_option("--n", n, "extension degree over the prime field (with --p)");
    }
};

void emit(const std::string& s, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw CLI::ValidationError("cannot open output file: " + out_path);
    f << s;
}

}  // namespace

int main(int argc, char** argv) {
    apply_env_bounds();

    CLI::App app{
        "charfield: exact character tables of GL2/SL2 over finite fields and the number "
        "fields generated by their character values.\n"
        "Environment: CHARFIELD_MAX_LEVEL, CHARFIELD_MAX_Q, CHARFIELD_MAX_M override the "
        "desk-scale bounds (largest cyclotomic level / field size / matrix rank)."};
    app.require_subcommand(1);

    std::string group = "gl2", format = "text", out_path, claim;
    std::vector<std::string> claims;
    long order_d = 0, ell = 0, twist = 1, q_max = 13, ellr_max = 27;
    int r = 0, m = 2, m_max = 3;
    bool quiet = false;

    auto* t_cmd = app.add_subcommand("table", "dump classes and the full character table");
    QOpt t_q;
    t_q.add_to(t_cmd);
    t_cmd->add_option("--group", group, "gl2 or sl2")->check(CLI::IsMember({"gl2", "sl2"}));
    t_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    t_cmd->add_option("--twist", twist, "alternate generator exponent (unit mod q^2-1)");
    t_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* f_cmd = app.add_subcommand("field", "field generated by character values");
    QOpt f_q;
    f_q.add_to(f_cmd);
    f_cmd->add_option("--group", group, "gl2, sl2 or glm")
        ->check(CLI::IsMember({"gl2", "sl2", "glm"}));
    f_cmd->add_option("--m", m, "matrix rank for --group glm");
    f_cmd->add_option("--order", order_d,
                      "restrict to classes of this element order (prime power for glm)");
    f_cmd->add_option("--ell", ell, "prime for an order ell^r filter");
    f_cmd->add_option("--r", r, "exponent for an order ell^r filter");
    f_cmd->add_option("--twist", twist, "alternate generator exponent (unit mod q^2-1)");
    f_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    f_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* v_cmd = app.add_subcommand("verify", "verify one field identity");
    QOpt v_q;
    v_q.add_to(v_cmd);
    v_cmd->add_option("--claim", claim, "claim id (Thm1..Thm6, L1, L2, L3.1, K4, K8, smalld, 2r)")
        ->required();
    v_cmd->add_option("--ell", ell, "prime ell");
    v_cmd->add_option("--r", r, "exponent r");
    v_cmd->add_option("--d", order_d, "order parameter d");
    v_cmd->add_option("--m", m, "matrix rank");
    v_cmd->add_option("--twist", twist, "alternate generator exponent (unit mod q^2-1)");
    v_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    v_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* s_cmd = app.add_subcommand("sweep", "verify claims over parameter ranges");
    s_cmd->add_option("--claims", claims, "claim ids, or ALL")->required();
    s_cmd->add_option("--q-max", q_max, "largest prime power q");
    s_cmd->add_option("--ellr-max", ellr_max, "largest prime power ell^r");
    s_cmd->add_option("--m-max", m_max, "largest matrix rank for Thm2");
    s_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* st_cmd = app.add_subcommand(
        "selftest", "invariant suites: orthogonality, Galois laws, Gauss-sum squares");
    st_cmd->add_flag("--quiet", quiet, "only print the final summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (t_cmd->parsed()) {
            const long q = t_q.resolve();
            const CharacterTable& t =
                group == "gl2" ? CharacterTable::gl2(q, twist) : CharacterTable::sl2(q, twist);
            std::cerr << "q = " << q << " = " << t_q.p << "^" << t_q.n << "\n";
            emit(format == "json" ? to_json_string(t) : to_text(t), out_path);
            return kExitOk;
        }

        if (f_cmd->parsed()) {
            const long q = f_q.resolve();
            std::cerr << "q = " << q << " = " << f_q.p << "^" << f_q.n << "\n";
            if (ell != 0 || r != 0) {
                if (ell == 0 || r == 0) throw CLI::ValidationError("--ell and --r go together");
                if (order_d != 0) throw CLI::ValidationError("give --order or --ell/--r, not both");
                order_d = 1;
                for (int i = 0; i < r; ++i) order_d *= ell;
            }
            FieldDescriptor f;
            if (group == "glm") {
                if (order_d == 0) {
                    f = k_glm(m, q);
                } else {
                    const auto [l, rr] = prime_power_split(order_d);
                    f = k_ellr_glm(m, q, l, rr);
                }
            } else {
                const CharacterTable& t =
                    group == "gl2" ? CharacterTable::gl2(q, twist) : CharacterTable::sl2(q, twist);
                f = order_d == 0 ? t.field_generated() : t.field_generated(order_d);
            }
            emit(format == "json" ? to_json_string(f) : to_text(f), out_path);
            return kExitOk;
        }

        if (v_cmd->parsed()) {
            ClaimParams pr;
            pr.q = v_q.resolve();
            std::cerr << "q = " << pr.q << " = " << v_q.p << "^" << v_q.n << "\n";
            pr.ell = ell;
            pr.r = r;
            pr.d = order_d;
            pr.m = m;
            pr.twist = twist;
            const VerificationResult res = verify(claim, pr);
            emit(format == "json" ? to_json_string(res) : to_text(res), out_path);
            return res.status == Status::Fail ? kExitFail : kExitOk;
        }

        if (s_cmd->parsed()) {
            const auto results = sweep(claims, q_max, ellr_max, m_max);
            emit(format == "json" ? to_json_string(results) : to_text(results), out_path);
            for (const VerificationResult& r : results)
                if (r.status == Status::Fail) return kExitFail;
            return kExitOk;
        }

        if (st_cmd->parsed()) return run_selftest(std::cout, quiet) == 0 ? kExitOk : kExitFail;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
