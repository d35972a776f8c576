#include "charfield/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "charfield/numtheory.hpp"

namespace charfield {

namespace {

using nlohmann::json;

json field_json(const FieldDescriptor& f) {
    json j;
    j["conductor"] = f.conductor;
    j["degree"] = f.degree;
    j["fixing"] = f.fixing.elements;
    j["names"] = f.names();
    return j;
}

json cyclo_json(const Cyclotomic& v) {
    json j;
    j["level"] = v.level();
    json coeffs = json::array();
    for (const Rational& c : v.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

Cyclotomic cyclo_from(const json& j) {
    const long level = j.at("level").get<long>();
    std::vector<std::pair<long, Rational>> terms;
    long i = 0;
    for (const auto& c : j.at("coeffs")) terms.emplace_back(i++, Rational(c.get<std::string>()));
    if (i != totient(level)) throw std::invalid_argument("coefficient count != phi(level)");
    return Cyclotomic::from_terms(level, terms);
}

json class_json(const ConjClass& c) {
    json j;
    j["family"] = c.family;
    j["label"] = c.label;
    j["order"] = c.order;
    j["params"] = c.params;
    j["size"] = c.size;
    return j;
}

json char_json(const CharId& c) {
    json j;
    j["degree"] = c.degree;
    j["family"] = c.family;
    j["label"] = c.label;
    j["params"] = c.params;
    return j;
}

json table_json(const CharacterTable& t) {
    json j;
    j["group"] = t.group == Group::GL2 ? "gl2" : "sl2";
    j["q"] = t.q;
    j["p"] = t.p;
    j["n"] = t.n;
    j["group_order"] = t.group_order;
    j["classes"] = json::array();
    for (const ConjClass& c : t.classes) j["classes"].push_back(class_json(c));
    j["characters"] = json::array();
    for (const CharId& c : t.chars) j["characters"].push_back(char_json(c));
    json values = json::array();
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < t.classes.size(); ++k)
            row.push_back(cyclo_json(t.value(i, k).to_cyclotomic()));
        values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
    j["notes"] = t.notes;
    return j;
}

json params_json(const ClaimParams& p) {
    json j;
    j["q"] = p.q;
    if (p.ell) j["ell"] = p.ell;
    if (p.r) j["r"] = p.r;
    if (p.d) j["d"] = p.d;
    j["m"] = p.m;
    if (p.twist != 1) j["twist"] = p.twist;
    return j;
}

json result_json(const VerificationResult& r) {
    json j;
    j["claim"] = r.claim;
    j["params"] = params_json(r.params);
    j["status"] = status_str(r.status);
    if (r.status != Status::Skipped) {
        j["computed"] = field_json(r.computed);
        j["predicted"] = field_json(r.predicted);
    }
    j["notes"] = r.notes;
    return j;
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

std::string to_json_string(const FieldDescriptor& f, int indent) {
    return dump(field_json(f), indent);
}
std::string to_json_string(const Cyclotomic& v, int indent) { return dump(cyclo_json(v), indent); }
std::string to_json_string(const CharacterTable& t, int indent) {
    return dump(table_json(t), indent);
}
std::string to_json_string(const VerificationResult& r, int indent) {
    return dump(result_json(r), indent);
}

std::string to_json_string(const std::vector<VerificationResult>& rs, int indent) {
    json arr = json::array();
    long pass = 0, fail = 0, skip = 0;
    for (const VerificationResult& r : rs) {
        arr.push_back(result_json(r));
        (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skip)++;
    }
    json j;
    j["results"] = std::move(arr);
    j["summary"] = {{"fail", fail}, {"pass", pass}, {"skipped", skip},
                    {"total", static_cast<long>(rs.size())}};
    return dump(j, indent);
}

FieldDescriptor field_from_json_string(const std::string& s) {
    const json j = json::parse(s);
    FieldDescriptor f;
    f.conductor = j.at("conductor").get<long>();
    f.degree = j.at("degree").get<long>();
    f.fixing.modulus = f.conductor;
    f.fixing.elements = j.at("fixing").get<std::vector<long>>();
    return f;
}

Cyclotomic cyclotomic_from_json_string(const std::string& s) {
    return cyclo_from(json::parse(s));
}

FieldDescriptor field_from_table_json_string(const std::string& s, long order_d) {
    const json j = json::parse(s);
    std::vector<Cyclotomic> gens;
    std::size_t k = 0;
    std::vector<bool> keep;
    for (const auto& c : j.at("classes"))
        keep.push_back(order_d == 0 || c.at("order").get<long>() == order_d);
    if (order_d != 0 && std::find(keep.begin(), keep.end(), true) == keep.end())
        throw std::invalid_argument("no element of order " + std::to_string(order_d));
    for (const auto& row : j.at("values")) {
        k = 0;
        for (const auto& v : row) {
            if (keep[k++]) gens.push_back(cyclo_from(v));
        }
    }
    return field_of(gens);
}

std::string to_text(const FieldDescriptor& f) {
    std::ostringstream os;
    os << f.str() << "\n";
    return os.str();
}

std::string to_text(const CharacterTable& t) {
    std::ostringstream os;
    os << (t.group == Group::GL2 ? "GL2(F_" : "SL2(F_") << t.q << ")  q = " << t.p << "^" << t.n
       << "  |G| = " << t.group_order << "\n";
    os << "classes (" << t.classes.size() << "):\n";
    for (const ConjClass& c : t.classes)
        os << "  " << std::setw(14) << std::left << c.label << " size " << std::setw(8) << c.size
           << " order " << c.order << "\n";
    os << "characters (" << t.chars.size() << "):\n";
    for (const CharId& c : t.chars)
        os << "  " << std::setw(14) << std::left << c.label << " degree " << c.degree << "\n";
    os << "values (rows = characters, columns = classes):\n";
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        os << "  " << std::setw(14) << std::left << t.chars[i].label;
        for (std::size_t k = 0; k < t.classes.size(); ++k)
            os << (k ? " | " : " ") << t.value(i, k).to_cyclotomic().str();
        os << "\n";
    }
    for (const std::string& note : t.notes) os << "note: " << note << "\n";
    return os.str();
}

std::string to_text(const VerificationResult& r) {
    std::ostringstream os;
    os << r.claim << "  q=" << r.params.q;
    if (r.params.ell) os << " ell^r=" << r.params.ell << "^" << r.params.r;
    if (r.params.d) os << " d=" << r.params.d;
    if (r.params.m != 2) os << " m=" << r.params.m;
    if (r.params.twist != 1) os << " twist=" << r.params.twist;
    os << "  " << status_str(r.status);
    if (r.status != Status::Skipped)
        os << "\n  computed:  " << r.computed.str() << "\n  predicted: " << r.predicted.str();
    for (const std::string& note : r.notes) os << "\n  note: " << note;
    os << "\n";
    return os.str();
}

std::string to_text(const std::vector<VerificationResult>& rs) {
    std::ostringstream os;
    long pass = 0, fail = 0, skip = 0;
    for (const VerificationResult& r : rs) {
        os << to_text(r);
        (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skip)++;
    }
    os << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skipped, "
       << rs.size() << " total\n";
    return os.str();
}

}  // namespace charfield
