#include "charfield/gl2_sl2.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "charfield/config.hpp"
#include "charfield/numtheory.hpp"

namespace charfield {

namespace {

// Order of gen^e in a cyclic group of size N.
long ord_in_cyclic(long N, long e) {
    if (N == 1) return 1;
    e = mod_reduce(e, N);
    return N / std::gcd(N, e);
}

RootSum rs_int(long v) { return RootSum::rational(Rational(v)); }

RootSum rs_root(long n, long e, long coeff = 1) {
    return RootSum::root(n, mod_reduce(e, n), Rational(coeff));
}

long emul(long a, long b, long n) { return mul_mod(mod_reduce(a, n), mod_reduce(b, n), n); }

std::string bracket(const std::vector<long>& params) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
    os << "]";
    return os.str();
}

void check_twist(long twist, long modulus) {
    if (twist < 1 || std::gcd(mod_reduce(twist, std::max(modulus, 2L)), modulus) != 1)
        throw std::invalid_argument("CharacterTable: twist must be a unit mod q^2 - 1");
}

}  // namespace

// Sign choices for the split characters W', W'', X', X'' on the classes
// b_{x,y}.  u1 = +1 is the W' labeling convention; the rest is resolved by
// orthogonality.
struct SplitChoice {
    int u_m1 = 1;   // W' sqrt coefficient sign at x = -1
    int v_p1 = 1;   // X' sqrt coefficient sign at x = +1
    int v_m1 = 1;   // X' sqrt coefficient sign at x = -1
    int pi_m1 = 1;  // X'/X'' rational prefactor at x = -1 (tau(-1) or psi(-1))
};

// Friend of CharacterTable; the builders fill the private value matrix.
struct TableBuilder {
    static CharacterTable gl2(long q, long twist);
    static CharacterTable sl2_odd(long q, long twist);
    static CharacterTable sl2_odd_candidate(long q, long twist, const SplitChoice& ch);
    static CharacterTable sl2_even(long q, long twist);
};

// ---------------------------------------------------------------------------
// GL2

CharacterTable TableBuilder::gl2(long q, long twist) {
    const auto [p, n] = prime_power_split(q);
    if (q > 55000) throw BoundExceeded("q too large for exact 64-bit group orders");
    const long qm = q - 1, Q2 = q * q - 1;
    check_level_bound(Q2);
    check_twist(twist, Q2);

    CharacterTable t;
    t.group = Group::GL2;
    t.q = q;
    t.p = p;
    t.n = n;
    t.group_order = (q * q - 1) * (q * q - q);

    for (long a = 0; a < qm; ++a)
        t.classes.push_back({"a", {a}, 1, ord_in_cyclic(qm, emul(twist, a, std::max(qm, 1L))),
                             "a" + bracket({a})});
    for (long a = 0; a < qm; ++a)
        t.classes.push_back({"b", {a}, q * q - 1,
                             p * ord_in_cyclic(qm, emul(twist, a, std::max(qm, 1L))),
                             "b" + bracket({a})});
    for (long a = 0; a < qm; ++a)
        for (long b = a + 1; b < qm; ++b)
            t.classes.push_back({"c",
                                 {a, b},
                                 q * q + q,
                                 std::lcm(ord_in_cyclic(qm, emul(twist, a, qm)),
                                          ord_in_cyclic(qm, emul(twist, b, qm))),
                                 "c" + bracket({a, b})});
    for (long b = 1; b < Q2; ++b) {
        if (b % (q + 1) == 0) continue;                   // zeta in F_q
        if (b > mod_reduce(b * q, Q2)) continue;          // zeta ~ zeta^q
        t.classes.push_back(
            {"d", {b}, q * q - q, ord_in_cyclic(Q2, emul(twist, b, Q2)), "d" + bracket({b})});
    }

    for (long e = 0; e < std::max(qm, 1L); ++e)
        t.chars.push_back({"U", {e}, 1, "U" + bracket({e})});
    for (long e = 0; e < std::max(qm, 1L); ++e)
        t.chars.push_back({"V", {e}, q, "V" + bracket({e})});
    for (long ej = 0; ej < qm; ++ej)
        for (long ek = ej + 1; ek < qm; ++ek)
            t.chars.push_back({"W", {ej, ek}, q + 1, "W" + bracket({ej, ek})});
    for (long c = 1; c < Q2; ++c) {
        if (c % (q + 1) == 0) continue;                   // phi = phi^q
        if (c > mod_reduce(c * q, Q2)) continue;          // phi ~ phi^q
        t.chars.push_back({"X", {c}, q - 1, "X" + bracket({c})});
    }

    const long am = std::max(qm, 1L);  // alpha level; q = 2 degenerates to Q
    for (const CharId& chi : t.chars) {
        std::vector<RootSum> row;
        row.reserve(t.classes.size());
        for (const ConjClass& cl : t.classes) {
            RootSum v;
            if (chi.family == "U" || chi.family == "V") {
                const long e = chi.params[0];
                if (cl.family == "a")
                    v = rs_root(am, 2 * e * cl.params[0], chi.family == "U" ? 1 : q);
                else if (cl.family == "b")
                    v = chi.family == "U" ? rs_root(am, 2 * e * cl.params[0]) : RootSum{};
                else if (cl.family == "c")
                    v = rs_root(am, e * (cl.params[0] + cl.params[1]));
                else
                    v = rs_root(am, emul(e, cl.params[0], am), chi.family == "U" ? 1 : -1);
            } else if (chi.family == "W") {
                const long ej = chi.params[0], ek = chi.params[1];
                if (cl.family == "a")
                    v = rs_root(am, (ej + ek) * cl.params[0], q + 1);
                else if (cl.family == "b")
                    v = rs_root(am, (ej + ek) * cl.params[0]);
                else if (cl.family == "c")
                    v = rs_root(am, ej * cl.params[0] + ek * cl.params[1]) +
                        rs_root(am, ej * cl.params[1] + ek * cl.params[0]);
            } else {  // X
                const long c = chi.params[0];
                if (cl.family == "a")
                    v = rs_root(am, emul(c, cl.params[0], am), q - 1);
                else if (cl.family == "b")
                    v = rs_root(am, emul(c, cl.params[0], am), -1);
                else if (cl.family == "d")
                    v = rs_root(Q2, emul(c, cl.params[0], Q2), -1) +
                        rs_root(Q2, emul(c, emul(cl.params[0], q, Q2), Q2), -1);
            }
            row.push_back(std::move(v));
        }
        t.values_.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// SL2, odd q

CharacterTable TableBuilder::sl2_odd_candidate(long q, long twist, const SplitChoice& ch) {
    const auto [p, n] = prime_power_split(q);
    const long qm = q - 1, qp = q + 1, Q2 = q * q - 1;
    const long um = mod_reduce(twist, qm), up = mod_reduce(twist, qp);
    const int tau_m1 = (q % 4 == 1) ? 1 : -1;  // tau(-1) = (-1)^((q-1)/2)
    const int psi_m1 = -tau_m1;                // psi(-1) = (-1)^((q+1)/2)
    (void)Q2;

    CharacterTable t;
    t.group = Group::SL2;
    t.q = q;
    t.p = p;
    t.n = n;
    t.group_order = q * (q * q - 1);

    t.classes.push_back({"I", {}, 1, 1, "I"});
    t.classes.push_back({"-I", {}, 1, 2, "-I"});
    for (int sx : {1, -1})
        for (int ye : {0, 1})
            t.classes.push_back({"b",
                                 {sx, ye},
                                 (q * q - 1) / 2,
                                 sx == 1 ? p : 2 * p,
                                 std::string("b[") + (sx == 1 ? "1," : "-1,") +
                                     (ye == 0 ? "1]" : "e]")});
    for (long a = 1; a <= (q - 3) / 2; ++a)
        t.classes.push_back({"c", {a}, q * q + q, ord_in_cyclic(qm, emul(um, a, qm)),
                             "c" + bracket({a})});
    for (long j = 1; j <= (q - 1) / 2; ++j)
        t.classes.push_back({"d", {j}, q * q - q, ord_in_cyclic(qp, emul(up, j, qp)),
                             "d" + bracket({j})});

    t.chars.push_back({"U", {}, 1, "U"});
    t.chars.push_back({"V", {}, q, "V"});
    for (long e = 1; e <= (q - 3) / 2; ++e)
        t.chars.push_back({"W", {e}, q + 1, "W" + bracket({e})});
    for (long c = 1; c <= (q - 1) / 2; ++c)
        t.chars.push_back({"X", {c}, q - 1, "X" + bracket({c})});
    t.chars.push_back({"W'", {}, (q + 1) / 2, "W'"});
    t.chars.push_back({"W''", {}, (q + 1) / 2, "W''"});
    t.chars.push_back({"X'", {}, (q - 1) / 2, "X'"});
    t.chars.push_back({"X''", {}, (q - 1) / 2, "X''"});

    const RootSum gauss = sqrt_qstar_root_sum(p, n);  // sqrt(q*), level p

    // b-class value [pref/2](eps1 + s * tau(y) sqrt(q*)).
    auto split_b = [&](int pref, int eps1, int s, int ye) {
        RootSum v = RootSum::rational(make_rational(pref * eps1, 2));
        RootSum g = gauss;
        g *= make_rational(pref * s * (ye == 0 ? 1 : -1), 2);
        return v + g;
    };

    for (const CharId& chi : t.chars) {
        std::vector<RootSum> row;
        row.reserve(t.classes.size());
        for (const ConjClass& cl : t.classes) {
            const bool at_mI = cl.family == "-I";
            RootSum v;
            if (chi.family == "U") {
                v = rs_int(1);
            } else if (chi.family == "V") {
                if (cl.family == "I" || at_mI)
                    v = rs_int(q);
                else if (cl.family == "c")
                    v = rs_int(1);
                else if (cl.family == "d")
                    v = rs_int(-1);
            } else if (chi.family == "W") {
                const long e = chi.params[0];
                const int e_m1 = e % 2 == 0 ? 1 : -1;  // alpha_e(-1)
                if (cl.family == "I")
                    v = rs_int(q + 1);
                else if (at_mI)
                    v = rs_int((q + 1) * e_m1);
                else if (cl.family == "b")
                    v = rs_int(cl.params[0] == 1 ? 1 : e_m1);
                else if (cl.family == "c")
                    v = rs_root(qm, e * cl.params[0]) + rs_root(qm, -e * cl.params[0]);
            } else if (chi.family == "X") {
                const long c = chi.params[0];
                const int c_m1 = c % 2 == 0 ? 1 : -1;  // phi_c(-1)
                if (cl.family == "I")
                    v = rs_int(q - 1);
                else if (at_mI)
                    v = rs_int((q - 1) * c_m1);
                else if (cl.family == "b")
                    v = rs_int(cl.params[0] == 1 ? -1 : -c_m1);
                else if (cl.family == "d")
                    v = rs_root(qp, c * cl.params[0], -1) + rs_root(qp, -c * cl.params[0], -1);
            } else if (chi.family == "W'" || chi.family == "W''") {
                const int flip = chi.family == "W'" ? 1 : -1;
                if (cl.family == "I")
                    v = rs_int((q + 1) / 2);
                else if (at_mI)
                    v = rs_int((q + 1) / 2 * tau_m1);
                else if (cl.family == "b") {
                    const int sx = static_cast<int>(cl.params[0]);
                    v = split_b(sx == 1 ? 1 : tau_m1, 1, flip * (sx == 1 ? 1 : ch.u_m1),
                                static_cast<int>(cl.params[1]));
                } else if (cl.family == "c")
                    v = rs_int(cl.params[0] % 2 == 0 ? 1 : -1);  // tau(x)
            } else {  // X', X''
                const int flip = chi.family == "X'" ? 1 : -1;
                if (cl.family == "I")
                    v = rs_int((q - 1) / 2);
                else if (at_mI)
                    v = rs_int((q - 1) / 2 * psi_m1);
                else if (cl.family == "b") {
                    const int sx = static_cast<int>(cl.params[0]);
                    v = split_b(sx == 1 ? 1 : ch.pi_m1, -1, flip * (sx == 1 ? ch.v_p1 : ch.v_m1),
                                static_cast<int>(cl.params[1]));
                } else if (cl.family == "d")
                    v = rs_int(cl.params[0] % 2 == 0 ? -1 : 1);  // -psi(zeta)
            }
            row.push_back(std::move(v));
        }
        t.values_.push_back(std::move(row));
    }
    return t;
}

// -I is central, so chi(-g) = (chi(-I)/chi(1)) chi(g); orthogonality alone
// cannot see a swap of the two b_{-1,y} classes, this relation can.
static bool central_signs_ok(const CharacterTable& t) {
    long mI = -1, b11 = -1, b1e = -1, bm1 = -1, bme = -1;
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        const ConjClass& cl = t.classes[c];
        if (cl.family == "-I") mI = static_cast<long>(c);
        if (cl.family != "b") continue;
        (cl.params[0] == 1 ? (cl.params[1] == 0 ? b11 : b1e)
                           : (cl.params[1] == 0 ? bm1 : bme)) = static_cast<long>(c);
    }
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        const Rational sign = make_rational(t.value(i, mI).to_cyclotomic().rational_value() ==
                                                    Rational(t.chars[i].degree)
                                                ? 1
                                                : -1);
        for (auto [plus, minus] : {std::pair{b11, bm1}, std::pair{b1e, bme}}) {
            RootSum scaled = t.value(i, plus);
            scaled *= sign;
            if (scaled.to_cyclotomic() != t.value(i, minus).to_cyclotomic()) return false;
        }
    }
    return true;
}

CharacterTable TableBuilder::sl2_odd(long q, long twist) {
    const int tau_m1 = (q % 4 == 1) ? 1 : -1;
    const int psi_m1 = -tau_m1;
    std::vector<std::pair<SplitChoice, CharacterTable>> passing;
    for (int u_m1 : {1, -1})
        for (int v_p1 : {1, -1})
            for (int v_m1 : {1, -1})
                for (int pi_m1 : {tau_m1, psi_m1}) {
                    SplitChoice ch{u_m1, v_p1, v_m1, pi_m1};
                    CharacterTable cand = sl2_odd_candidate(q, twist, ch);
                    if (cand.degree_identity_ok() && central_signs_ok(cand) &&
                        cand.row_orthogonality_ok() && cand.column_orthogonality_ok())
                        passing.emplace_back(ch, std::move(cand));
                }
    // Negating both X' sqrt signs just swaps the X'/X'' labels, so exactly two
    // assignments survive; keep the one with v(+1) = +1.
    if (passing.size() != 2)
        throw std::logic_error("sl2 split resolver: expected exactly 2 consistent assignments, got " +
                               std::to_string(passing.size()));
    const SplitChoice &c0 = passing[0].first, &c1 = passing[1].first;
    if (c0.u_m1 != c1.u_m1 || c0.pi_m1 != c1.pi_m1 || c0.v_p1 != -c1.v_p1 ||
        c0.v_m1 != -c1.v_m1)
        throw std::logic_error("sl2 split resolver: surviving assignments are not a label swap");
    auto& chosen = passing[c0.v_p1 == 1 ? 0 : 1];
    CharacterTable t = std::move(chosen.second);
    const SplitChoice ch = chosen.first;
    std::ostringstream note;
    note << "split resolver: W'(b_{-1,y}) sqrt sign " << (ch.u_m1 == 1 ? "+" : "-")
         << ", X'(b_{-1,y}) sqrt sign " << (ch.v_m1 == 1 ? "+" : "-")
         << ", X'/X'' prefactor at x=-1 is " << (ch.pi_m1 == psi_m1 ? "psi(-1)" : "tau(-1)");
    t.notes.push_back(note.str());
    if (ch.pi_m1 == psi_m1 && psi_m1 != tau_m1)
        t.notes.push_back(
            "printed table uses tau(x)/2 prefactor for X', X'' on b classes and claims "
            "tau(-1) = psi(-1); for this q they differ and orthogonality forces psi(-1)");
    t.notes.push_back("X'(d_zeta) = X''(d_zeta) = -psi(zeta) (printed '-psi(y)' read as -psi(zeta))");
    return t;
}

// ---------------------------------------------------------------------------
// SL2, even q

CharacterTable TableBuilder::sl2_even(long q, long twist) {
    const auto [p, n] = prime_power_split(q);
    const long qm = q - 1, qp = q + 1;
    const long um = mod_reduce(twist, std::max(qm, 2L)), up = mod_reduce(twist, qp);

    CharacterTable t;
    t.group = Group::SL2;
    t.q = q;
    t.p = p;
    t.n = n;
    t.group_order = q * (q * q - 1);

    t.classes.push_back({"I", {}, 1, 1, "I"});
    t.classes.push_back({"b", {}, q * q - 1, 2, "b"});
    for (long a = 1; a <= (q - 2) / 2; ++a)
        t.classes.push_back({"c", {a}, q * q + q, ord_in_cyclic(qm, emul(um, a, qm)),
                             "c" + bracket({a})});
    for (long j = 1; j <= q / 2; ++j)
        t.classes.push_back({"d", {j}, q * q - q, ord_in_cyclic(qp, emul(up, j, qp)),
                             "d" + bracket({j})});

    t.chars.push_back({"U", {}, 1, "U"});
    t.chars.push_back({"V", {}, q, "V"});
    for (long e = 1; e <= (q - 2) / 2; ++e)
        t.chars.push_back({"W", {e}, q + 1, "W" + bracket({e})});
    for (long c = 1; c <= q / 2; ++c)
        t.chars.push_back({"X", {c}, q - 1, "X" + bracket({c})});

    for (const CharId& chi : t.chars) {
        std::vector<RootSum> row;
        row.reserve(t.classes.size());
        for (const ConjClass& cl : t.classes) {
            RootSum v;
            if (chi.family == "U") {
                v = rs_int(1);
            } else if (chi.family == "V") {
                if (cl.family == "I")
                    v = rs_int(q);
                else if (cl.family == "c")
                    v = rs_int(1);
                else if (cl.family == "d")
                    v = rs_int(-1);
            } else if (chi.family == "W") {
                const long e = chi.params[0];
                if (cl.family == "I")
                    v = rs_int(q + 1);
                else if (cl.family == "b")
                    v = rs_int(1);
                else if (cl.family == "c")
                    v = rs_root(qm, e * cl.params[0]) + rs_root(qm, -e * cl.params[0]);
            } else {  // X
                const long c = chi.params[0];
                if (cl.family == "I")
                    v = rs_int(q - 1);
                else if (cl.family == "b")
                    v = rs_int(-1);
                else if (cl.family == "d")
                    v = rs_root(qp, c * cl.params[0], -1) + rs_root(qp, -c * cl.params[0], -1);
            }
            row.push_back(std::move(v));
        }
        t.values_.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// CharacterTable

namespace {

// lcm of value levels per row (or per column when by_row is false); keeps the
// orthogonality accumulators at the smallest level each pair needs.
std::vector<long> lane_levels(const CharacterTable& t, bool by_row) {
    const std::size_t lanes = by_row ? t.chars.size() : t.classes.size();
    const std::size_t other = by_row ? t.classes.size() : t.chars.size();
    std::vector<long> levels(lanes, 1);
    for (std::size_t i = 0; i < lanes; ++i)
        for (std::size_t j = 0; j < other; ++j)
            levels[i] = std::lcm(levels[i], (by_row ? t.value(i, j) : t.value(j, i)).level);
    return levels;
}

}  // namespace

const CharacterTable& CharacterTable::gl2(long q, long twist) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{q, twist}];
    if (!slot) {
        if (q > bounds().max_q) throw BoundExceeded("q exceeds configured maximum");
        slot = std::make_unique<CharacterTable>(TableBuilder::gl2(q, twist));
    }
    return *slot;
}

const CharacterTable& CharacterTable::sl2(long q, long twist) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{q, twist}];
    if (!slot) {
        if (q > bounds().max_q) throw BoundExceeded("q exceeds configured maximum");
        slot = std::make_unique<CharacterTable>(q % 2 == 0 ? TableBuilder::sl2_even(q, twist)
                                                           : TableBuilder::sl2_odd(q, twist));
    }
    return *slot;
}

bool CharacterTable::row_orthogonality_ok(std::string* diag) const {
    const std::vector<long> row_level = lane_levels(*this, true);
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = i; j < chars.size(); ++j) {
            const long L = std::lcm(row_level[i], row_level[j]);
            RootAccum acc(L);
            for (std::size_t c = 0; c < classes.size(); ++c)
                acc.add_product(values_[i][c], values_[j][c].conjugate(),
                                Rational(classes[c].size));
            const Cyclotomic got = acc.value();
            const Cyclotomic expect(Rational(i == j ? group_order : 0));
            if (got != expect) {
                if (diag)
                    *diag = "row orthogonality failed at (" + chars[i].label + ", " +
                            chars[j].label + "): got " + got.str();
                return false;
            }
        }
    return true;
}

bool CharacterTable::column_orthogonality_ok(std::string* diag) const {
    const std::vector<long> col_level = lane_levels(*this, false);
    for (std::size_t c1 = 0; c1 < classes.size(); ++c1)
        for (std::size_t c2 = c1; c2 < classes.size(); ++c2) {
            const long L = std::lcm(col_level[c1], col_level[c2]);
            RootAccum acc(L);
            for (std::size_t i = 0; i < chars.size(); ++i)
                acc.add_product(values_[i][c1], values_[i][c2].conjugate(), Rational(1));
            const Cyclotomic got = acc.value();
            const Cyclotomic expect(
                Rational(c1 == c2 ? group_order / classes[c1].size : 0));
            if (got != expect) {
                if (diag)
                    *diag = "column orthogonality failed at (" + classes[c1].label + ", " +
                            classes[c2].label + "): got " + got.str();
                return false;
            }
        }
    return true;
}

bool CharacterTable::degree_identity_ok() const {
    long deg2 = 0, sizes = 0;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        deg2 += chars[i].degree * chars[i].degree;
        if (values_[i][0].to_cyclotomic() != Cyclotomic(chars[i].degree))
            return false;  // chi(1) must equal the declared degree
    }
    for (const ConjClass& c : classes) sizes += c.size;
    return deg2 == group_order && sizes == group_order;
}

namespace {

// Generators of the kernel of Z_M^x -> Z_d^x (d | M).
const std::vector<long>& kernel_generators(long M, long d) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::vector<long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({M, d});
    if (it != cache.end()) return it->second;
    std::vector<long> gens;
    ResidueGroup have = ResidueGroup::generated(M, {});
    for (long s : units_mod(M)) {
        if (s == 1 || (d > 1 && s % d != 1)) continue;
        if (have.contains(s)) continue;
        gens.push_back(s);
        have = ResidueGroup::generated(M, gens);
    }
    return cache.emplace(std::make_pair(M, d), std::move(gens)).first->second;
}

bool fixed_by(const RootSum& v, long s) {
    RootSum image = v.galois(s);
    if (image.terms == v.terms) return true;  // sparse fast path
    return image.to_cyclotomic() == v.to_cyclotomic();
}

}  // namespace

bool CharacterTable::value_levels_ok(std::string* diag) const {
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const long d = classes[c].order;
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const RootSum& v = values_[i][c];
            if (v.is_zero()) continue;
            const long M = std::lcm(v.level, d);
            const RootSum lifted = v.at_level(M);
            for (long s : kernel_generators(M, d)) {
                if (!fixed_by(lifted, s)) {
                    if (diag)
                        *diag = chars[i].label + " at " + classes[c].label + " (order " +
                                std::to_string(d) + ") is moved by galois(" + std::to_string(s) +
                                ")";
                    return false;
                }
            }
        }
    }
    return true;
}

FieldDescriptor CharacterTable::field_generated() const {
    std::vector<RootSum> gens;
    for (const auto& row : values_)
        for (const RootSum& v : row) gens.push_back(v);
    return field_of(gens);
}

FieldDescriptor CharacterTable::field_generated(long order_d) const {
    std::vector<RootSum> gens;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].order != order_d) continue;
        for (std::size_t i = 0; i < chars.size(); ++i) gens.push_back(values_[i][c]);
    }
    if (gens.empty())
        throw std::invalid_argument("no element of order " + std::to_string(order_d));
    return field_of(gens);
}

std::vector<long> CharacterTable::element_orders() const {
    std::set<long> orders;
    for (const ConjClass& c : classes) orders.insert(c.order);
    return {orders.begin(), orders.end()};
}

std::map<std::pair<std::string, long>, long> CharacterTable::class_census() const {
    std::map<std::pair<std::string, long>, long> census;
    for (const ConjClass& c : classes) ++census[{c.family, c.order}];
    return census;
}

}  // namespace charfield
