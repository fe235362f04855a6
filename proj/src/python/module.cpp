// Python bindings for the core operations: continued fractions and
// parity normal forms, twist/braid words with their Burau matrices,
// Alexander closed forms, quadratic-form classification, and the
// adjunction-defect obstruction engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "twistcalc/braid.hpp"
#include "twistcalc/contfrac.hpp"
#include "twistcalc/invariants.hpp"
#include "twistcalc/obstruction.hpp"
#include "twistcalc/qform.hpp"

namespace py = pybind11;
using namespace twistcalc;

namespace {

py::dict poly1_dict(const LaurentPoly1& p) {
    py::dict d;
    for (const auto& [exp, coeff] : p.terms()) d[py::int_(exp)] = coeff;
    return d;
}

py::dict poly2_dict(const LaurentPoly2& p) {
    py::dict d;
    for (const auto& [exps, coeff] : p.terms())
        d[py::make_tuple(exps.first, exps.second)] = coeff;
    return d;
}

py::list mat_rows(const IntMat& m) {
    py::list rows;
    for (int i = 0; i < m.n; ++i) {
        py::list row;
        for (int j = 0; j < m.n; ++j) row.append(m.a[i][j]);
        rows.append(row);
    }
    return rows;
}

py::list move_list(const std::vector<Move>& moves) {
    py::list out;
    for (const Move& m : moves) {
        py::dict d;
        d["variant"] = to_string(m.variant);
        d["site"] = m.site;
        d["sign"] = m.sign;
        out.append(d);
    }
    return out;
}

py::dict normal_form_dict(const NormalForm& nf) {
    py::dict d;
    d["coeffs"] = nf.coeffs;
    d["kind"] = to_string(nf.kind);
    d["p"] = nf.value.p;
    d["q"] = nf.value.q;
    d["witness"] = move_list(nf.witness);
    if (nf.kind == FormKind::link_form) d["mod4"] = mod4_signed_odd_sum(nf);
    return d;
}

Move parse_move(const std::string& variant, int site, int sign) {
    for (MoveVariant v : {MoveVariant::interior_insert, MoveVariant::interior_delete,
                          MoveVariant::append_insert, MoveVariant::append_delete,
                          MoveVariant::prepend_insert, MoveVariant::prepend_delete})
        if (to_string(v) == variant) return Move{v, site, sign};
    throw bad_name("unknown move variant: " + variant);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Twist calculus: parity continued fractions, braid-word "
              "invariants, quadratic-form classification, and adjunction "
              "obstruction certificates.";

    py::register_exception<twistcalc::error>(m, "TwistcalcError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](i64 p, i64 q) { return make_rational(p, q); }), py::arg("p"),
             py::arg("q") = 1)
        .def_readonly("p", &Rational::p)
        .def_readonly("q", &Rational::q)
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__repr__", [](const Rational& r) {
            return std::to_string(r.p) + "/" + std::to_string(r.q);
        });

    m.def(
        "evaluate", [](const std::vector<i64>& coeffs) { return cf_evaluate(coeffs); },
        py::arg("coeffs"), "Value of a negative continued fraction coefficient list.");

    m.def(
        "expand", [](i64 p, i64 q) { return cf_expand(make_rational(p, q)); }, py::arg("p"),
        py::arg("q") = 1, "Ceiling-type coefficient list of p/q (entries >= 2 after the first).");

    m.def(
        "normalize", [](i64 p, i64 q) { return normal_form_dict(cf_normalize(make_rational(p, q))); },
        py::arg("p"), py::arg("q") = 1,
        "Parity normal form of p/q with its move witness; raises for even q.");

    m.def(
        "apply_move",
        [](const std::vector<i64>& coeffs, const std::string& variant, int site, int sign) {
            return cf_apply_move(coeffs, parse_move(variant, site, sign));
        },
        py::arg("coeffs"), py::arg("variant"), py::arg("site"), py::arg("sign"),
        "Apply one value-preserving list move (insert/delete at a site).");

    m.def(
        "twist_word",
        [](i64 p, i64 q) {
            TwistWord w = twist_word(make_rational(p, q));
            BraidWord b = to_braid(w);
            py::dict d;
            d["word_text"] = to_string(w);
            d["braid_text"] = to_string(b);
            d["f2_exponent"] = f2_exponent(w);
            return d;
        },
        py::arg("p"), py::arg("q") = 1,
        "Twist word of p/q (p even), its braid image, and the free-part exponent.");

    m.def(
        "nontriviality",
        [](i64 p, i64 q) {
            NontrivialityReport r = word_nontriviality_report(make_rational(p, q));
            py::dict d;
            d["word_text"] = to_string(r.word);
            d["braid_text"] = to_string(r.braid);
            d["f2_exponent"] = r.f2;
            d["trivial"] = r.trivial;
            d["evidence"] = r.evidence;
            return d;
        },
        py::arg("p"), py::arg("q") = 1,
        "Faithful-representation test of the twist word of p/q.");

    m.def(
        "burau",
        [](const std::string& word) {
            BurauMatrix b = burau(parse_braid_word(word));
            py::dict d;
            d["a"] = poly1_dict(b.a);
            d["b"] = poly1_dict(b.b);
            d["c"] = poly1_dict(b.c);
            d["d"] = poly1_dict(b.d);
            d["det"] = poly1_dict(b.det());
            d["is_identity"] = b.is_identity();
            return d;
        },
        py::arg("word"),
        "Reduced Burau matrix of a braid word like 's1 s2^-1'; entries as {exp: coeff}.");

    m.def(
        "alexander_two_bridge",
        [](i64 p, i64 q) { return poly1_dict(alexander_two_bridge(make_rational(p, q))); },
        py::arg("p"), py::arg("q") = 1,
        "Symmetric Alexander polynomial of the two-bridge knot/link p/q as {exp: coeff}.");

    m.def(
        "alexander_closure",
        [](const std::string& word) {
            ClosurePoly c = alexander_closure(parse_braid_word(word));
            py::dict d;
            d["poly"] = poly1_dict(c.poly);
            d["degenerate"] = c.degenerate;
            return d;
        },
        py::arg("word"), "Alexander polynomial of the closure of a 3-strand braid word.");

    m.def(
        "torus_link_alexander", [](i64 n) { return poly2_dict(torus_link_alexander(n)); },
        py::arg("n"),
        "Two-variable closed form for the (2, 2n) torus link as {(e1, e2): coeff}.");

    m.def("basic_classes", [](i64 n) { return basic_classes(n); }, py::arg("n"),
          "The n negation-symmetric basic classes.");

    m.def("torus_knot_genus", &torus_knot_genus, py::arg("a"), py::arg("b"),
          "Genus (a-1)(b-1)/2 of the (a, b) torus knot.");

    m.def(
        "classify_twist",
        [](i64 p, i64 q) {
            TwistClassification tc = classify_twist(make_rational(p, q));
            py::dict d;
            d["kind"] = to_string(tc.kind);
            d["p_mod4"] = tc.p_mod4;
            d["standardized_as"] = tc.standardized_as;
            d["gram"] = mat_rows(tc.dbl.gram);
            d["change_of_basis"] = mat_rows(tc.change_of_basis);
            return d;
        },
        py::arg("p"), py::arg("q") = 1,
        "Plug / g-cork dichotomy of the twisted double of p/q (p even), with certificate.");

    m.def(
        "enumerate_isometries",
        [](const std::string& name, int bound) {
            py::list out;
            for (const IntMat& m_ : enumerate_isometries(parse_form_name(name), bound))
                out.append(mat_rows(m_));
            return out;
        },
        py::arg("form"), py::arg("bound"),
        "All isometries of a named form with entries within the bound.");

    m.def(
        "surface_data",
        [](i64 m_idx) {
            SurfaceData s = surface_data(m_idx);
            py::dict d;
            d["m"] = s.m;
            d["genus"] = s.genus;
            d["self_intersection"] = s.self_int;
            d["gram"] = mat_rows(s.gram);
            d["basis"] = s.basis_labels;
            return d;
        },
        py::arg("m"), "Genus, self-intersection, and pairing data of the m-th surface.");

    m.def(
        "nondiffeo_certificate",
        [](i64 m_idx, i64 n_idx) {
            ObstructionCertificate cert = nondiffeo_certificate(m_idx, n_idx);
            py::dict d;
            d["m"] = cert.m;
            d["n"] = cert.n;
            d["parity"] = to_string(cert.parity);
            d["threshold"] = cert.threshold;
            d["conclusion"] = to_string(cert.conclusion);
            d["reason"] = cert.reason;
            py::list cases;
            for (const CaseRow& row : cert.cases) {
                py::dict c;
                c["case"] = row.label;
                c["defect"] = row.defect;
                c["c_sn"] = row.c_sn;
                c["c_sn_odd"] = row.c_sn_odd;
                c["k_coefficient"] = row.k_coeff;
                c["k_positive"] = row.k_positive;
                cases.append(c);
            }
            d["cases"] = cases;
            return d;
        },
        py::arg("m"), py::arg("n"),
        "Adjunction-defect certificate that the (m, n) pair is not diffeomorphic.");
}
