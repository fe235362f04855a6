#pragma once

/// JSON views of every public type.  All maps are emitted in sorted key
/// order and polynomial terms in ascending exponent order, so rendering
/// the same value twice produces byte-identical output.

#include <json.hpp>

#include "twistcalc/braid.hpp"
#include "twistcalc/contfrac.hpp"
#include "twistcalc/invariants.hpp"
#include "twistcalc/laurent.hpp"
#include "twistcalc/obstruction.hpp"
#include "twistcalc/qform.hpp"
#include "twistcalc/rational.hpp"

namespace twistcalc {

inline void to_json(nlohmann::json& j, const Rational& r) {
    j = nlohmann::json{{"p", r.p}, {"q", r.q}};
}

inline void to_json(nlohmann::json& j, const LaurentPoly1& f) {
    j = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) j.push_back({e, c});
}

inline void to_json(nlohmann::json& j, const LaurentPoly2& f) {
    j = nlohmann::json::array();
    for (const auto& [es, c] : f.terms()) j.push_back({es.first, es.second, c});
}

inline void to_json(nlohmann::json& j, const Move& m) {
    j = nlohmann::json{{"variant", to_string(m.variant)}, {"site", m.site}, {"sign", m.sign}};
}

inline void to_json(nlohmann::json& j, const NormalForm& nf) {
    j = nlohmann::json{{"coeffs", nf.coeffs},
                       {"kind", to_string(nf.kind)},
                       {"value", nf.value},
                       {"witness", nf.witness}};
}

inline void to_json(nlohmann::json& j, const TwistWord& w) {
    j = nlohmann::json::array();
    for (const auto& s : w.letters)
        j.push_back({s.gen == TwistGen::psi ? "psi" : "phi", s.exp});
}

inline void to_json(nlohmann::json& j, const BraidWord& w) {
    j = nlohmann::json::array();
    for (const auto& s : w.letters)
        j.push_back({s.gen == BraidGen::sigma1 ? "s1" : "s2", s.exp});
}

inline void to_json(nlohmann::json& j, const BurauMatrix& m) {
    j = nlohmann::json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

inline void to_json(nlohmann::json& j, const ClosurePoly& c) {
    j = nlohmann::json{{"poly", c.poly}, {"degenerate", c.degenerate}};
}

inline void to_json(nlohmann::json& j, const NontrivialityReport& r) {
    j = nlohmann::json{{"word", to_string(r.word)},
                       {"braid", to_string(r.braid)},
                       {"f2_exponent", r.f2},
                       {"trivial", r.trivial},
                       {"evidence", r.evidence}};
}

inline void to_json(nlohmann::json& j, const IntMat& m) {
    j = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.n; ++k) row.push_back(m.a[i][k]);
        j.push_back(row);
    }
}

inline void to_json(nlohmann::json& j, const GramForm& q) {
    j = nlohmann::json{{"gram", q.gram}, {"basis", q.basis_labels}, {"rank", q.rank()}};
}

inline void to_json(nlohmann::json& j, const TwistClassification& c) {
    j = nlohmann::json{{"kind", to_string(c.kind)},
                       {"p_mod4", c.p_mod4},
                       {"double_form", c.dbl},
                       {"standardized_as", c.standardized_as},
                       {"change_of_basis", c.change_of_basis}};
}

inline void to_json(nlohmann::json& j, const SurfaceData& s) {
    j = nlohmann::json{{"m", s.m},
                       {"genus", s.genus},
                       {"self_intersection", s.self_int},
                       {"gram", s.gram},
                       {"basis", s.basis_labels}};
}

inline void to_json(nlohmann::json& j, const CoeffVector& c) {
    j = nlohmann::json{{"c_t1", c.c_t1}, {"c_t2", c.c_t2}, {"c_sn", c.c_sn}};
}

inline void to_json(nlohmann::json& j, const CaseRow& r) {
    j = nlohmann::json{{"case", r.label},
                       {"defect", r.defect},
                       {"c_sn", r.c_sn},
                       {"c_sn_odd", r.c_sn_odd},
                       {"k_coefficient", r.k_coeff},
                       {"k_positive", r.k_positive}};
}

inline void to_json(nlohmann::json& j, const ObstructionCertificate& c) {
    j = nlohmann::json{{"m", c.m},
                       {"n", c.n},
                       {"parity", to_string(c.parity)},
                       {"threshold", c.threshold},
                       {"cases", c.cases},
                       {"conclusion", to_string(c.conclusion)},
                       {"reason", c.reason}};
}

/// Human-oriented one-line rendering of a Laurent polynomial in t.
inline std::string poly_to_string(const LaurentPoly1& f) {
    if (f.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        i64 ab = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        if (e == 0) {
            mono = std::to_string(ab);
        } else {
            if (ab != 1) mono = std::to_string(ab) + "*";
            mono += "t";
            if (e != 1) mono += "^" + std::to_string(e);
        }
        out += mono;
    }
    return out;
}

/// Same for two variables s, t.
inline std::string poly2_to_string(const LaurentPoly2& f) {
    if (f.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [es, c] : f.terms()) {
        i64 ab = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        auto var = [](const char* name, i64 e) -> std::string {
            if (e == 0) return "";
            std::string v = name;
            if (e != 1) v += "^" + std::to_string(e);
            return v;
        };
        std::string vs = var("s", es.first), vt = var("t", es.second);
        if (vs.empty() && vt.empty()) {
            mono = std::to_string(ab);
        } else {
            if (ab != 1) mono = std::to_string(ab) + "*";
            mono += vs;
            if (!vs.empty() && !vt.empty()) mono += "*";
            mono += vt;
        }
        out += mono;
    }
    return out;
}

}  // namespace twistcalc
