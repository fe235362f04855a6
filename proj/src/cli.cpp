#include "twistcalc/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "twistcalc/serialize.hpp"

namespace twistcalc::cli {

namespace {

using nlohmann::json;

ContinuedFraction parse_coeff_list(const std::string& text) {
    ContinuedFraction out;
    if (text.empty()) throw parse_error("empty coefficient list");
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw parse_error("empty entry in coefficient list '" + text + "'");
        std::size_t used = 0;
        i64 v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw parse_error("bad coefficient '" + item + "'");
        }
        if (used != item.size()) throw parse_error("bad coefficient '" + item + "'");
        out.push_back(v);
    }
    if (text.back() == ',') throw parse_error("trailing comma in coefficient list");
    return out;
}

json normal_form_payload(const NormalForm& nf) {
    json j = nf;
    if (nf.kind == FormKind::link_form) j["mod4"] = mod4_signed_odd_sum(nf);
    return j;
}

json run_cf_eval(const std::string& coeffs_text, std::vector<std::string>& warnings) {
    ContinuedFraction coeffs = parse_coeff_list(coeffs_text);
    auto [raw_p, raw_q] = cf_evaluate_raw(coeffs);
    Rational r = cf_evaluate(coeffs);
    if (r.is_infinite()) warnings.push_back("coefficient list evaluates to infinity");
    return json{{"coeffs", coeffs}, {"p", r.p}, {"q", r.q}, {"raw_p", raw_p}, {"raw_q", raw_q}};
}

json run_cf_expand(const std::string& rat_text) {
    Rational r = parse_rational(rat_text);
    ContinuedFraction coeffs = cf_expand(r);
    return json{{"p", r.p}, {"q", r.q}, {"coeffs", coeffs}};
}

json run_cf_normalize(const std::string& rat_text) {
    Rational r = parse_rational(rat_text);
    NormalForm nf = cf_normalize(r);
    json j = normal_form_payload(nf);
    j["p"] = r.p;
    j["q"] = r.q;
    return j;
}

json run_twist_word(const std::string& rat_text) {
    Rational r = parse_rational(rat_text);
    NormalForm nf = cf_normalize(r);
    TwistWord w = twist_word_from(nf);
    BraidWord b = to_braid(w);
    return json{{"rational", r},
                {"coeffs", nf.coeffs},
                {"twist_word", w},
                {"twist_word_text", to_string(w)},
                {"braid_word", b},
                {"braid_word_text", to_string(b)},
                {"f2_exponent", f2_exponent(w)}};
}

json run_twist_is_trivial(const std::string& rat_text) {
    Rational r = parse_rational(rat_text);
    NontrivialityReport rep = word_nontriviality_report(r);
    json j = rep;
    j["rational"] = r;
    return j;
}

json run_braid_burau(const std::string& word_text) {
    BraidWord w = parse_braid_word(word_text);
    BurauMatrix m = burau(w);
    return json{{"word", to_string(w)},
                {"burau", m},
                {"det", m.det()},
                {"det_text", poly_to_string(m.det())},
                {"is_identity", m.is_identity()}};
}

json run_inv_alexander(const std::string& rat_text, std::vector<std::string>& warnings) {
    Rational r = parse_rational(rat_text);
    LaurentPoly1 tb = alexander_two_bridge(r);
    json j{{"rational", r}, {"two_bridge", tb}, {"two_bridge_text", poly_to_string(tb)}};
    try {
        NormalForm nf = cf_normalize(r);
        BraidWord pattern = braid_Bpq(nf);
        ClosurePoly cp = alexander_closure(pattern);
        j["pattern_braid"] = to_string(pattern);
        j["pattern_closure"] = cp;
        j["pattern_closure_text"] = poly_to_string(cp.poly);
        if (cp.degenerate) warnings.push_back("pattern braid closure is degenerate");
    } catch (const no_normal_form&) {
        warnings.push_back("no parity normal form (q even): pattern braid omitted");
    }
    return j;
}

json run_inv_torus_link(i64 n) {
    LaurentPoly2 f = torus_link_alexander(n);
    return json{{"n", n},
                {"poly", f},
                {"poly_text", poly2_to_string(f)},
                {"term_count", static_cast<i64>(f.term_count())},
                {"value_at_ones", f.eval_ones()}};
}

json run_inv_basic_classes(i64 n) {
    BasicClassSet cls = basic_classes(n);
    return json{{"n", n},
                {"classes", cls},
                {"count", static_cast<i64>(cls.size())},
                {"pairing_check", basic_class_pairing_check(n)}};
}

json run_inv_genus(i64 a, i64 b) {
    return json{{"a", a}, {"b", b}, {"genus", torus_knot_genus(a, b)}};
}

json run_form_show(const std::string& name) {
    GramForm q = parse_form_name(name);
    json j = q;
    j["name"] = name;
    j["parity"] = to_string(form_parity(q));
    return j;
}

json run_form_classify(const std::string& rat_text) {
    Rational r = parse_rational(rat_text);
    TwistClassification c = classify_twist(r);
    json j = c;
    j["rational"] = r;
    return j;
}

json run_form_isometries(const std::string& name, int bound, const std::string& shape) {
    GramForm q = parse_form_name(name);
    std::vector<FormIsometry> all = enumerate_isometries(q, bound);
    json rows = json::array();
    i64 triangular = 0, h_block = 0;
    for (const auto& m : all) {
        bool keep = true;
        if (q.rank() == 3) {
            bool tri = matches_lemma_shape(m, LemmaShape::triangular);
            bool hb = matches_lemma_shape(m, LemmaShape::h_block);
            triangular += tri ? 1 : 0;
            h_block += hb ? 1 : 0;
            if (shape == "triangular") keep = tri;
            if (shape == "h_block") keep = hb;
        }
        if (keep) rows.push_back(m);
    }
    json j{{"name", name},
           {"bound", bound},
           {"count", static_cast<i64>(rows.size())},
           {"total", static_cast<i64>(all.size())},
           {"isometries", rows}};
    if (q.rank() == 3) {
        j["triangular_count"] = triangular;
        j["h_block_count"] = h_block;
    }
    return j;
}

json run_obstruct_certify(i64 m, i64 n, Status& status) {
    ObstructionCertificate cert = nondiffeo_certificate(m, n);
    if (cert.conclusion == Conclusion::inconclusive) status = Status::inconclusive;
    json j = cert;
    j["surface_m"] = surface_data(m);
    j["surface_n"] = surface_data(n);
    return j;
}

void render_text_into(const json& j, const std::string& prefix, std::string& out) {
    auto scalar = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            std::string path = prefix.empty() ? key : prefix + "." + key;
            render_text_into(value, path, out);
        }
        return;
    }
    if (j.is_array()) {
        bool flat = std::all_of(j.begin(), j.end(),
                                [](const json& v) { return !v.is_object() && !v.is_array(); });
        if (flat) {
            out += prefix + ": [";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                out += scalar(j[i]);
            }
            out += "]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            render_text_into(j[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out += prefix + ": " + scalar(j) + "\n";
}

}  // namespace

std::string render_text(const json& payload) {
    std::string out;
    render_text_into(payload, "", out);
    return out;
}

std::string render(const CommandResult& result) {
    if (!result.override_text.empty() && result.format == "text") return result.override_text;
    if (result.format == "json") return result.payload.dump(2) + "\n";
    return render_text(result.payload);
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::user_error: return 1;
        case Status::inconclusive: return 2;
    }
    return 1;
}

CommandResult dispatch(const std::vector<std::string>& args) {
    CommandResult result;

    CLI::App app{"twist calculus: continued fractions, braid words, knot invariants,\n"
                 "quadratic forms, and adjunction-defect certificates"};
    app.require_subcommand(1);
    app.add_option("--format", result.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string coeffs_text, rat_text, word_text, form_name, shape;
    i64 n_arg = 0, a_arg = 0, b_arg = 0, m_arg = 0;
    int bound = 1;

    auto* cf = app.add_subcommand("cf", "negative continued fractions");
    cf->require_subcommand(1);
    auto* cf_eval = cf->add_subcommand("eval", "evaluate a coefficient list");
    cf_eval->add_option("coeffs", coeffs_text, "comma-separated integers, e.g. 2,1,2")->required();
    auto* cf_expand_cmd = cf->add_subcommand("expand", "ceiling-type expansion of p/q");
    cf_expand_cmd->add_option("rational", rat_text, "p/q with q > 0")->required();
    auto* cf_norm = cf->add_subcommand("normalize", "parity normal form with move witness");
    cf_norm->add_option("rational", rat_text, "p/q with q > 0")->required();

    auto* twist = app.add_subcommand("twist", "boundary twist words");
    twist->require_subcommand(1);
    auto* twist_word_cmd = twist->add_subcommand("word", "twist word of an even fraction");
    twist_word_cmd->add_option("rational", rat_text, "p/q with p even")->required();
    auto* twist_triv = twist->add_subcommand("is-trivial", "word-problem nontriviality report");
    twist_triv->add_option("rational", rat_text, "p/q with p even")->required();

    auto* braid = app.add_subcommand("braid", "3-strand braid words");
    braid->require_subcommand(1);
    auto* braid_burau = braid->add_subcommand("burau", "reduced Burau matrix of a word");
    braid_burau->add_option("word", word_text, "e.g. \"s1 s2^-1 s1^3\"")->required();

    auto* inv = app.add_subcommand("inv", "knot and link invariants");
    inv->require_subcommand(1);
    auto* inv_alex = inv->add_subcommand("alexander", "two-bridge Alexander polynomial");
    inv_alex->add_option("rational", rat_text, "p/q, coprime, 0 < q < 2|p|")->required();
    auto* inv_torus = inv->add_subcommand("torus-link", "4-torus-link surgery polynomial");
    inv_torus->add_option("n", n_arg, "number of components, n >= 1")->required();
    auto* inv_basic = inv->add_subcommand("basic-classes", "basic class multiset");
    inv_basic->add_option("n", n_arg, "number of components, n >= 1")->required();
    auto* inv_genus = inv->add_subcommand("genus", "torus-knot genus (a-1)(b-1)/2");
    inv_genus->add_option("a", a_arg, "strand count")->required();
    inv_genus->add_option("b", b_arg, "twist count, coprime to a")->required();

    auto* form = app.add_subcommand("form", "integral quadratic forms");
    form->require_subcommand(1);
    auto* form_show = form->add_subcommand("show", "display a named form");
    form_show->add_option("name", form_name,
                          "Zero1|Diag+1|Diag-1|H|Y_even|Y_odd|Z_even|Z_odd|Double:p:N")
        ->required();
    auto* form_classify = form->add_subcommand("classify", "plug / g-cork dichotomy");
    form_classify->add_option("rational", rat_text, "p/q with p even")->required();
    auto* form_isos = form->add_subcommand("isometries", "bounded isometry enumeration");
    form_isos->add_option("name", form_name, "named form, rank <= 4")->required();
    form_isos->add_option("--bound", bound, "max |entry|, 0..6")->capture_default_str();
    form_isos->add_option("--shape", shape, "filter rank-3 results: triangular|h_block")
        ->check(CLI::IsMember({"triangular", "h_block"}));

    auto* obstruct = app.add_subcommand("obstruct", "non-diffeomorphism certificates");
    obstruct->require_subcommand(1);
    auto* obstruct_cert = obstruct->add_subcommand("certify", "adjunction-defect case table");
    obstruct_cert->add_option("m", m_arg, "source surface index, m >= 0")->required();
    obstruct_cert->add_option("n", n_arg, "target surface index, n > m, same parity")->required();

    for (auto* sub : {cf, twist, braid, inv, form, obstruct}) sub->fallthrough();
    for (auto* sub : {cf_eval, cf_expand_cmd, cf_norm, twist_word_cmd, twist_triv, braid_burau,
                      inv_alex, inv_torus, inv_basic, inv_genus, form_show, form_classify,
                      form_isos, obstruct_cert})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        app.exit(e, help, help);
        result.override_text = help.str();
        result.payload = json{{"help", help.str()}};
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = Status::user_error;
        result.payload = json{{"error", std::string(e.what())}};
        result.override_text = std::string(e.what()) + "\nRun with --help for usage.\n";
        return result;
    }

    try {
        if (*cf_eval) result.payload = run_cf_eval(coeffs_text, result.warnings);
        else if (*cf_expand_cmd) result.payload = run_cf_expand(rat_text);
        else if (*cf_norm) result.payload = run_cf_normalize(rat_text);
        else if (*twist_word_cmd) result.payload = run_twist_word(rat_text);
        else if (*twist_triv) result.payload = run_twist_is_trivial(rat_text);
        else if (*braid_burau) result.payload = run_braid_burau(word_text);
        else if (*inv_alex) result.payload = run_inv_alexander(rat_text, result.warnings);
        else if (*inv_torus) result.payload = run_inv_torus_link(n_arg);
        else if (*inv_basic) result.payload = run_inv_basic_classes(n_arg);
        else if (*inv_genus) result.payload = run_inv_genus(a_arg, b_arg);
        else if (*form_show) result.payload = run_form_show(form_name);
        else if (*form_classify) result.payload = run_form_classify(rat_text);
        else if (*form_isos) result.payload = run_form_isometries(form_name, bound, shape);
        else if (*obstruct_cert) result.payload = run_obstruct_certify(m_arg, n_arg, result.status);
    } catch (const error& e) {
        result.status = Status::user_error;
        result.payload = json{{"error", std::string(e.what())}};
        result.override_text = "error: " + std::string(e.what()) + "\n";
    }
    return result;
}

}  // namespace twistcalc::cli
