// Python bindings: exact cyclotomic arithmetic, character-table fields for
// GL2/SL2/GL_m over finite fields, and the field-identity verifiers.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charfield/config.hpp"
#include "charfield/galois_fields.hpp"
#include "charfield/gl2_sl2.hpp"
#include "charfield/glm.hpp"
#include "charfield/json_io.hpp"
#include "charfield/numtheory.hpp"
#include "charfield/theorems.hpp"

namespace py = pybind11;
using namespace charfield;

namespace {

const CharacterTable& table_for(const std::string& group, long q, long twist) {
    if (group == "gl2") return CharacterTable::gl2(q, twist);
    if (group == "sl2") return CharacterTable::sl2(q, twist);
    throw std::invalid_argument("group must be 'gl2' or 'sl2'");
}

}  // namespace

PYBIND11_MODULE(charfield, mod) {
    mod.doc() =
        "Exact character tables of GL2/SL2 over finite fields and the number fields "
        "generated by their character values.";

    py::register_exception<BoundExceeded>(mod, "BoundExceeded");

    py::class_<Cyclotomic>(mod, "Cyclotomic")
        .def(py::init<long>())
        .def_static("root", &Cyclotomic::root, py::arg("n"), py::arg("e"))
        .def_property_readonly("level", &Cyclotomic::level)
        .def("is_zero", &Cyclotomic::is_zero)
        .def("is_rational", &Cyclotomic::is_rational)
        .def("galois", &Cyclotomic::galois, py::arg("s"))
        .def("conjugate", &Cyclotomic::conjugate)
        .def("at_level", &Cyclotomic::at_level, py::arg("m"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(-py::self)
        .def("__str__", &Cyclotomic::str)
        .def("__repr__", &Cyclotomic::str);

    py::class_<FieldDescriptor>(mod, "FieldDescriptor")
        .def_readonly("conductor", &FieldDescriptor::conductor)
        .def_readonly("degree", &FieldDescriptor::degree)
        .def_property_readonly(
            "fixing", [](const FieldDescriptor& f) { return f.fixing.elements; })
        .def("names", &FieldDescriptor::names)
        .def("is_subfield_of", &FieldDescriptor::is_subfield_of)
        .def(py::self == py::self)
        .def("to_json", [](const FieldDescriptor& f) { return to_json_string(f, -1); })
        .def("__str__", &FieldDescriptor::str)
        .def("__repr__", &FieldDescriptor::str);

    py::class_<VerificationResult>(mod, "VerificationResult")
        .def_readonly("claim", &VerificationResult::claim)
        .def_readonly("computed", &VerificationResult::computed)
        .def_readonly("predicted", &VerificationResult::predicted)
        .def_readonly("notes", &VerificationResult::notes)
        .def_property_readonly(
            "status", [](const VerificationResult& r) { return status_str(r.status); })
        .def("ok", &VerificationResult::ok)
        .def("to_json", [](const VerificationResult& r) { return to_json_string(r, -1); })
        .def("__repr__", [](const VerificationResult& r) { return to_text(r); });

    mod.def("field_of", [](const std::vector<Cyclotomic>& gens) { return field_of(gens); },
            py::arg("generators"), "field generated over Q by cyclotomic elements");
    mod.def("cyclotomic_field", &cyclotomic_field, py::arg("d"));
    mod.def("real_cyclotomic_field", &real_cyclotomic_field, py::arg("d"));
    mod.def("quadratic_field", &quadratic_field, py::arg("m"));
    mod.def("qstar", &qstar, py::arg("q"));
    mod.def("sqrt_qstar", &sqrt_qstar_element, py::arg("p"), py::arg("n"),
            "quadratic Gauss sum over F_{p^n}, squares to q*");

    mod.def(
        "field",
        [](const std::string& group, long q, long order, long twist) {
            const CharacterTable& t = table_for(group, q, twist);
            return order == 0 ? t.field_generated() : t.field_generated(order);
        },
        py::arg("group"), py::arg("q"), py::arg("order") = 0, py::arg("twist") = 1,
        "K(G) or K_d(G) for G = GL2(F_q) or SL2(F_q)");
    mod.def(
        "table_json",
        [](const std::string& group, long q, long twist) {
            return to_json_string(table_for(group, q, twist));
        },
        py::arg("group"), py::arg("q"), py::arg("twist") = 1);
    mod.def(
        "table_ok",
        [](const std::string& group, long q) {
            const CharacterTable& t = table_for(group, q, 1);
            return t.degree_identity_ok() && t.row_orthogonality_ok() &&
                   t.column_orthogonality_ok() && t.value_levels_ok();
        },
        py::arg("group"), py::arg("q"),
        "degree identity, both orthogonality relations and value-level checks");

    mod.def("k_glm", &k_glm, py::arg("m"), py::arg("q"));
    mod.def("k_ellr_glm", &k_ellr_glm, py::arg("m"), py::arg("q"), py::arg("ell"), py::arg("r"));
    mod.def("exists_order", &exists_order, py::arg("m"), py::arg("q"), py::arg("ell"),
            py::arg("r"));
    mod.def("lemma31_check", &lemma31_check, py::arg("q"), py::arg("ell"), py::arg("r"),
            py::arg("i_tuple"));

    mod.def("all_claims", [] { return all_claims(); });
    mod.def(
        "verify",
        [](const std::string& claim, long q, long ell, int r, long d, int m, long twist) {
            ClaimParams p;
            p.q = q;
            p.ell = ell;
            p.r = r;
            p.d = d;
            p.m = m;
            p.twist = twist;
            return verify(claim, p);
        },
        py::arg("claim"), py::arg("q"), py::arg("ell") = 0, py::arg("r") = 0, py::arg("d") = 0,
        py::arg("m") = 2, py::arg("twist") = 1);
    mod.def("sweep", &sweep, py::arg("claims"), py::arg("q_max") = 13, py::arg("ellr_max") = 27,
            py::arg("m_max") = 3);
    mod.def("sweep_json",
            [](const std::vector<std::string>& claims, long q_max, long ellr_max, int m_max) {
                return to_json_string(sweep(claims, q_max, ellr_max, m_max));
            },
            py::arg("claims"), py::arg("q_max") = 13, py::arg("ellr_max") = 27,
            py::arg("m_max") = 3);
    mod.def("prime_powers_up_to", &prime_powers_up_to, py::arg("n"));
}
