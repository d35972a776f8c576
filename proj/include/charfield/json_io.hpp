#pragma once

// JSON and plain-text renderings of the library's result types.  JSON output
// is deterministic (object keys sorted, labels stable) and carries exact data
// only: cyclotomic values appear as coefficient vectors of rational strings
// on the power basis of their level, never as floats.

#include <string>
#include <vector>

#include "charfield/galois_fields.hpp"
#include "charfield/gl2_sl2.hpp"
#include "charfield/theorems.hpp"

namespace charfield {

// indent < 0 gives compact single-line output.
std::string to_json_string(const FieldDescriptor& f, int indent = 2);
std::string to_json_string(const Cyclotomic& v, int indent = 2);
std::string to_json_string(const CharacterTable& t, int indent = 2);
std::string to_json_string(const VerificationResult& r, int indent = 2);
// Array plus a pass/fail/skip summary object.
std::string to_json_string(const std::vector<VerificationResult>& rs, int indent = 2);

FieldDescriptor field_from_json_string(const std::string& s);
Cyclotomic cyclotomic_from_json_string(const std::string& s);
// Re-reads a table dump and rebuilds the field generated by the dumped
// values of the classes with the given element order (0 = all classes).
FieldDescriptor field_from_table_json_string(const std::string& s, long order_d = 0);

std::string to_text(const FieldDescriptor& f);
std::string to_text(const CharacterTable& t);
std::string to_text(const VerificationResult& r);
std::string to_text(const std::vector<VerificationResult>& rs);

std::string status_str(Status s);

}  // namespace charfield
