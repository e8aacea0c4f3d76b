#include "nalg/cli_core.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "nalg/analysis.hpp"
#include "nalg/classification.hpp"
#include "nalg/group_algebra.hpp"
#include "nalg/kernels.hpp"
#include "nalg/operad.hpp"
#include "nalg/subspace.hpp"
#include "nalg/vw.hpp"

namespace nalg::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing helpers

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

GroupAlgebraElement parse_vector6(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) tokens.push_back(trim(cur));
    if (!text.empty() && text.back() == ',') tokens.push_back("");
    if (tokens.size() != kGroupOrder) {
        throw SchemaError("expected 6 comma-separated rationals, got " +
                          std::to_string(tokens.size()));
    }
    GroupAlgebraElement v = zero_element();
    for (std::size_t i = 0; i < kGroupOrder; ++i) {
        auto r = try_parse_rational(tokens[i]);
        if (!r) throw SchemaError("not a rational: '" + tokens[i] + "'");
        v[i] = *r;
    }
    return v;
}

ordered_json element_json(const GroupAlgebraElement& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(format_rational(x));
    return a;
}

ordered_json basis_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : s.basis()) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row) r.push_back(format_rational(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json operad_basis_json(const Subspace& s) { return basis_json(s); }

ordered_json multiplicities_json(const IrrepMultiplicities& m) {
    ordered_json j;
    j["trivial"] = m.trivial;
    j["sign"] = m.sign;
    j["standard"] = m.standard;
    return j;
}

// Either a builtin name or a path to a JSON file.
StructureConstants resolve_algebra(const std::string& token) {
    if (std::filesystem::exists(token) && std::filesystem::is_regular_file(token)) {
        std::ifstream in(token);
        if (!in) throw SchemaError("cannot read file: " + token);
        std::stringstream buf;
        buf << in.rdbuf();
        return structure_constants_from_json(buf.str());
    }
    return builtin(token);
}

ordered_json algebra_input_json(const std::string& token, const StructureConstants& sc) {
    ordered_json j;
    if (!std::filesystem::exists(token)) {
        j["name"] = token;
    } else {
        j["table"] = ordered_json::parse(structure_constants_to_json(sc));
    }
    return j;
}

// Type labels: bare family ("IV_2", "V'") or family with parameter
// ("III_1(t=-2/3)").
std::pair<std::string, std::optional<Rational>> parse_type_label(const std::string& label) {
    auto open = label.find('(');
    if (open == std::string::npos) return {trim(label), std::nullopt};
    if (label.back() != ')') throw SchemaError("malformed type label: '" + label + "'");
    std::string family = trim(label.substr(0, open));
    std::string inner = trim(label.substr(open + 1, label.size() - open - 2));
    if (inner.rfind("t=", 0) != 0) {
        throw SchemaError("malformed parameter in type label: '" + label + "'");
    }
    std::string tok = trim(inner.substr(2));
    auto r = try_parse_rational(tok);
    if (!r) throw SchemaError("not a rational: '" + tok + "'");
    return {family, *r};
}

void emit(const ordered_json& report, bool json, std::ostream& out) {
    if (json) {
        out << report.dump(2) << "\n";
        return;
    }
    out << report["command"].get<std::string>() << "\n";
    const auto& results = report["results"];
    for (auto it = results.begin(); it != results.end(); ++it) {
        out << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
}

// ---------------------------------------------------------------------------
// classify

const char* kClassifyAnchors[] = {
    "invariant modules generated by a single defect vector",
    "families separated by module dimension and a recovered parameter",
};

int cmd_classify(const std::string& vec_text, bool json, std::ostream& out) {
    GroupAlgebraElement v = parse_vector6(vec_text);
    Subspace module = span_of_orbit(v);
    ClassificationResult la = classify_lie_admissible(v);
    ClassificationResult pa = classify_power_associative(v);

    ordered_json report;
    report["command"] = "classify";
    report["inputs"] = ordered_json{{"vector", element_json(v)}};
    ordered_json results;
    results["module_dim"] = module.dim();
    results["module_basis"] = basis_json(module);
    results["decompose"] = multiplicities_json(decompose(module));
    results["lie_admissible_type"] = la.label();
    results["power_associative_type"] = pa.label();
    report["results"] = std::move(results);
    report["paper_anchors"] = ordered_json(kClassifyAnchors);
    emit(report, json, out);
    return 0;
}

// ---------------------------------------------------------------------------
// analyze

const char* kAnalyzeAnchors[] = {
    "the annihilator of the associator action is an invariant module for "
    "right translation",
    "alternative algebras annihilate the five-dimensional signed-sum-zero module",
};

ordered_json analysis_json(const AlgebraAnalysis& a) {
    ordered_json results;
    results["dim"] = a.dim;
    results["annihilator_dim"] = a.ann.dim();
    results["annihilator_basis"] = basis_json(a.ann);
    results["annihilator_invariant"] = a.ann_invariant;
    results["decompose"] =
        a.ann_invariant ? multiplicities_json(a.parts) : ordered_json(nullptr);
    results["jacobi"] = a.jacobi;
    results["power_associative"] = a.power_assoc;
    results["alternative"] = a.alternative;
    results["type"] = a.type.label();
    return results;
}

int cmd_analyze(const std::string& token, bool json, std::ostream& out) {
    StructureConstants sc = resolve_algebra(token);
    AlgebraAnalysis a = analyze(sc);
    ordered_json report;
    report["command"] = "analyze";
    report["inputs"] = ordered_json{{"algebra", algebra_input_json(token, sc)}};
    report["results"] = analysis_json(a);
    report["paper_anchors"] = ordered_json(kAnalyzeAnchors);
    emit(report, json, out);
    return 0;
}

// ---------------------------------------------------------------------------
// tensor

const char* kTensorAnchors[] = {
    "a nonzero annihilator of a tensor product constrains both factors",
    "tensor products of associative algebras stay associative",
};

int cmd_tensor(const std::string& ta, const std::string& tb, bool json, std::ostream& out) {
    StructureConstants a = resolve_algebra(ta);
    StructureConstants b = resolve_algebra(tb);
    StructureConstants prod = tensor(a, b);
    Subspace ann = annihilator(prod);
    bool inv = is_invariant(ann);

    ordered_json report;
    report["command"] = "tensor";
    report["inputs"] = ordered_json{{"left", algebra_input_json(ta, a)},
                                    {"right", algebra_input_json(tb, b)}};
    ordered_json results;
    results["name"] = prod.name();
    results["dim"] = prod.dim();
    results["annihilator_dim"] = ann.dim();
    results["annihilator_basis"] = basis_json(ann);
    results["annihilator_invariant"] = inv;
    results["decompose"] =
        inv ? multiplicities_json(decompose(ann)) : ordered_json(nullptr);
    results["contains_sign_line"] = ann.contains(to_vector(vector_V()));
    results["contains_trivial_line"] = ann.contains(to_vector(vector_W()));
    report["results"] = std::move(results);
    report["paper_anchors"] = ordered_json(kTensorAnchors);
    emit(report, json, out);
    return 0;
}

// ---------------------------------------------------------------------------
// vw-check

const char* kVwAnchors[] = {
    "a certificate annihilating the defect difference with nonzero signed sum "
    "forces the commutator Jacobi identity",
};

int cmd_vw_check(const std::string& vt, const std::string& wt,
                 const std::string& algebra_token, bool json, std::ostream& out) {
    GroupAlgebraElement v = parse_vector6(vt);
    GroupAlgebraElement w = parse_vector6(wt);
    WitnessResult wit = lie_admissible_witness(v, w);

    ordered_json report;
    report["command"] = "vw-check";
    ordered_json inputs;
    inputs["v"] = element_json(v);
    inputs["w"] = element_json(w);

    ordered_json results;
    if (!algebra_token.empty()) {
        StructureConstants sc = resolve_algebra(algebra_token);
        inputs["algebra"] = algebra_input_json(algebra_token, sc);
        auto star = satisfies_star(sc, v, w);
        results["star"] = ordered_json::array({star.first, star.second});
        results["starstar"] = satisfies_starstar(sc, v, w);
    } else {
        results["star"] = nullptr;
        results["starstar"] = nullptr;
    }
    results["witness"] =
        wit.witness ? element_json(*wit.witness) : ordered_json(nullptr);
    results["reason"] = wit.reason;
    if (wit.coefficients) results["coefficients"] = element_json(*wit.coefficients);
    if (wit.u_prime) results["u_prime"] = element_json(*wit.u_prime);
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    report["paper_anchors"] = ordered_json(kVwAnchors);
    emit(report, json, out);
    return 0;
}

// ---------------------------------------------------------------------------
// dual

const char* kDualAnchors[] = {
    "dual relations span the orthogonal complement under the signed pairing",
    "the associativity module is self-dual",
};

ordered_json dual_check_json(const DualCheck& dc) {
    ordered_json results;
    results["family"] = dc.family;
    results["parameter"] =
        dc.parameter ? ordered_json(format_rational(*dc.parameter)) : ordered_json(nullptr);
    results["r_dim"] = dc.r.dim();
    results["r_perp_dim"] = dc.r_perp.dim();
    results["r_perp_basis"] = operad_basis_json(dc.r_perp);
    results["relation_count"] = dc.relations.size();
    results["generator_contract_ok"] = dc.generator_contract_ok;
    results["module_orthogonal_ok"] = dc.module_orthogonal_ok;
    results["equals_complement_ok"] = dc.equals_complement_ok;
    results["matches_paper_table"] = dc.matches_paper_table;
    ordered_json disc = ordered_json::array();
    for (const auto& d : dc.discrepancies) disc.push_back(d);
    results["discrepancies"] = std::move(disc);
    return results;
}

ordered_json dual_decomposition_json(const DualDecomposition& dd) {
    ordered_json j;
    j["contains_associativity"] = dd.contains_associativity;
    j["direct_sum_ok"] = dd.direct_sum_ok;
    j["u_dim"] = dd.u.dim();
    j["u_parts"] = multiplicities_json(dd.u_parts);
    j["sign_flat_line_in_u"] = dd.sign_flat_line_in_u;
    j["trivial_flat_line_in_u"] = dd.trivial_flat_line_in_u;
    return j;
}

int cmd_dual(const std::string& type_label, const std::string& vec_text,
             const std::string& t_text, bool json, std::ostream& out,
             std::ostream& err) {
    if (type_label.empty() == vec_text.empty()) {
        err << "dual: provide exactly one of a type label or --vector\n";
        return 2;
    }

    std::string family;
    std::optional<Rational> t;
    std::optional<std::string> classified_as;
    if (!t_text.empty()) {
        auto r = try_parse_rational(t_text);
        if (!r) throw SchemaError("not a rational: '" + t_text + "'");
        t = *r;
    }

    ordered_json inputs;
    ordered_json results;
    if (!type_label.empty()) {
        auto [fam, labeled_t] = parse_type_label(type_label);
        family = fam;
        if (labeled_t) t = labeled_t;
        inputs["type"] = type_label;
        if (t) inputs["t"] = format_rational(*t);
    } else {
        GroupAlgebraElement v = parse_vector6(vec_text);
        inputs["vector"] = element_json(v);
        ClassificationResult res = classify_lie_admissible(v);
        if (!res.classified) res = classify_power_associative(v);
        classified_as = res.label();
        if (!res.classified) {
            DualDecomposition dd = decompose_dual(v);
            results["classified_as"] = *classified_as;
            results["family"] = "unclassified";
            results["parameter"] = nullptr;
            results["r_dim"] = dd.r.dim();
            results["r_perp_dim"] = dd.r_perp.dim();
            results["r_perp_basis"] = operad_basis_json(dd.r_perp);
            results["matches_paper_table"] = false;
            results["discrepancies"] = ordered_json::array(
                {"vector does not generate one of the tabulated modules"});
            results["decomposition"] = dual_decomposition_json(dd);
            ordered_json report;
            report["command"] = "dual";
            report["inputs"] = std::move(inputs);
            report["results"] = std::move(results);
            report["paper_anchors"] = ordered_json(kDualAnchors);
            emit(report, json, out);
            return 0;
        }
        family = res.family;
        t = res.parameter;
    }

    DualCheck dc = verify_dual(family, t);
    results = dual_check_json(dc);
    if (classified_as) {
        ordered_json with_class;
        with_class["classified_as"] = *classified_as;
        for (auto it = results.begin(); it != results.end(); ++it) {
            with_class[it.key()] = it.value();
        }
        results = std::move(with_class);
    }
    results["decomposition"] =
        dual_decomposition_json(decompose_dual(family_generator(family, t)));

    ordered_json report;
    report["command"] = "dual";
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    report["paper_anchors"] = ordered_json(kDualAnchors);
    emit(report, json, out);
    return 0;
}

// ---------------------------------------------------------------------------
// selftest

struct Anchor {
    std::string name;
    bool pass;
};

std::vector<Anchor> run_selftest() {
    std::vector<Anchor> anchors;
    auto check = [&](const std::string& name, bool ok) {
        anchors.push_back({name, ok});
    };

    {
        Subspace fv = span_of_orbit(vector_V());
        Subspace fw = span_of_orbit(vector_W());
        IrrepMultiplicities mv = decompose(fv);
        IrrepMultiplicities mw = decompose(fw);
        check("sign line is one-dimensional and pure sign",
              fv.dim() == 1 && mv.trivial == 0 && mv.sign == 1 && mv.standard == 0);
        check("trivial line is one-dimensional and pure trivial",
              fw.dim() == 1 && mw.trivial == 1 && mw.sign == 0 && mw.standard == 0);
    }
    {
        GroupAlgebraElement a = zero_element();
        a[0] = rat(1);
        a[5] = rat(-1);
        GroupAlgebraElement b = zero_element();
        b[0] = rat(2);
        b[1] = rat(-1);
        b[2] = rat(-1);
        b[3] = rat(-1);
        b[4] = rat(1);
        check("recorded four-dimensional module", span_of_orbit(a).dim() == 4);
        check("recorded five-dimensional module", span_of_orbit(b).dim() == 5);
        check("group identity generates the full algebra",
              span_of_orbit(delta(perm_id())).dim() == 6);
    }
    {
        bool ok = true;
        for (const auto& gen : canonical_generators()) {
            ClassificationResult res = classify_lie_admissible(gen.generator);
            if (!res.classified) res = classify_power_associative(gen.generator);
            bool match = res.classified && res.family == gen.family;
            if (match && gen.parameter) {
                match = res.parameter && *res.parameter == *gen.parameter;
            }
            if (!match) ok = false;
        }
        check("all canonical generators classify to their own labels", ok);
    }
    {
        bool threw = false;
        try {
            classify_lie_admissible(zero_element());
        } catch (const ZeroVector&) {
            threw = true;
        }
        check("zero vector is rejected", threw);
    }
    {
        AlgebraAnalysis oct = analyze(builtin("octonions"));
        GroupAlgebraElement g = zero_element();
        g[0] = rat(2);
        g[1] = rat(1);
        g[2] = rat(1);
        g[3] = rat(1);
        g[4] = rat(1);
        check("octonion annihilator is the five-dimensional alternative module",
              oct.ann.dim() == 5 && oct.ann == span_of_orbit(g) && oct.alternative &&
                  oct.power_assoc && !oct.jacobi && oct.type.label() == "V'");
    }
    {
        Subspace ass = associativity_module();
        check("associativity relations are self-dual",
              orthogonal_complement(ass) == ass);
    }
    {
        GroupAlgebraElement v = sub(delta(perm_id()), delta(perm_t23()));
        GroupAlgebraElement w = sub(delta(perm_id()), delta(perm_t12()));
        WitnessResult wit = lie_admissible_witness(v, w);
        GroupAlgebraElement expected_u = zero_element();
        expected_u[0] = rat(1);
        expected_u[1] = rat(-1);
        expected_u[3] = rat(1);
        expected_u[5] = rat(-1);
        bool ok = wit.witness.has_value() && wit.u_prime.has_value() &&
                  *wit.u_prime == expected_u;
        if (ok) {
            GroupAlgebraElement chi = zero_element();
            chi[0] = rat(1);
            chi[1] = rat(1);
            chi[2] = rat(1);
            ok = is_zero(apply_element(chi, *wit.u_prime)) &&
                 signed_coefficient_sum(chi) != 0;
        }
        check("first recorded certificate example yields a witness", ok);

        GroupAlgebraElement v2 = zero_element();
        v2[0] = rat(2);
        v2[1] = rat(-1);
        v2[2] = rat(-1);
        v2[3] = rat(-1);
        v2[4] = rat(1);
        GroupAlgebraElement w2 = zero_element();
        w2[0] = rat(1);
        w2[4] = rat(1);
        w2[5] = rat(1);
        WitnessResult wit2 = lie_admissible_witness(v2, w2);
        check("second recorded example has no certificate", !wit2.witness.has_value());
    }
    {
        StructureConstants duals = builtin("dual_numbers");
        bool ok = monoidal_identity_check(duals) &&
                  monoidal_identity_check(tensor(duals, duals)) &&
                  !monoidal_identity_check(builtin("sl2_commutator"));
        check("monoidal identity closes on a recorded pair and fails on a bracket",
              ok);
    }
    return anchors;
}

const char* kSelftestAnchors[] = {
    "recorded values across the classification, analysis, certificate, and "
    "dual components",
};

int cmd_selftest(bool json, std::ostream& out) {
    std::vector<Anchor> anchors = run_selftest();
    bool all = std::all_of(anchors.begin(), anchors.end(),
                           [](const Anchor& a) { return a.pass; });

    ordered_json report;
    report["command"] = "selftest";
    report["inputs"] = ordered_json::object();
    ordered_json list = ordered_json::array();
    for (const auto& a : anchors) {
        list.push_back(ordered_json{{"name", a.name}, {"pass", a.pass}});
    }
    ordered_json results;
    results["anchors"] = std::move(list);
    results["all_pass"] = all;
    report["results"] = std::move(results);
    report["paper_anchors"] = ordered_json(kSelftestAnchors);

    if (json) {
        out << report.dump(2) << "\n";
    } else {
        for (const auto& a : anchors) {
            out << (a.pass ? "PASS" : "FAIL") << " " << a.name << "\n";
        }
        out << (all ? "all anchors pass" : "anchor failures present") << "\n";
    }
    return all ? 0 : 4;
}

}  // namespace

// ---------------------------------------------------------------------------
// wire format

std::string structure_constants_to_json(const StructureConstants& sc) {
    ordered_json j;
    j["dim"] = sc.dim();
    j["name"] = sc.name();
    ordered_json entries = ordered_json::array();
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t jj = 0; jj < n; ++jj) {
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = sc.at(i, jj, k);
                if (c == 0) continue;
                entries.push_back(ordered_json{{"i", i + 1},
                                               {"j", jj + 1},
                                               {"k", k + 1},
                                               {"c", format_rational(c)}});
            }
        }
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

StructureConstants structure_constants_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("algebra JSON must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw SchemaError("missing or non-integer field: dim");
    }
    long long dim = j["dim"].get<long long>();
    if (dim < 1 || dim > 4096) throw SchemaError("dim out of range");
    std::string name = "algebra";
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw SchemaError("field name must be a string");
        name = j["name"].get<std::string>();
    }
    StructureConstants sc(static_cast<std::size_t>(dim), name);
    if (!j.contains("entries")) return sc;
    if (!j["entries"].is_array()) throw SchemaError("field entries must be an array");
    std::vector<std::tuple<long long, long long, long long>> seen;
    for (const auto& e : j["entries"]) {
        if (!e.is_object()) throw SchemaError("entry must be an object");
        for (const char* f : {"i", "j", "k"}) {
            if (!e.contains(f) || !e[f].is_number_integer()) {
                throw SchemaError(std::string("missing or non-integer entry field: ") + f);
            }
        }
        long long i = e["i"].get<long long>();
        long long jj = e["j"].get<long long>();
        long long k = e["k"].get<long long>();
        if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim) {
            throw SchemaError("entry index out of range");
        }
        auto key = std::make_tuple(i, jj, k);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw SchemaError("duplicate entry at (" + std::to_string(i) + "," +
                              std::to_string(jj) + "," + std::to_string(k) + ")");
        }
        seen.push_back(key);
        Rational c;
        if (!e.contains("c")) throw SchemaError("missing entry field: c");
        if (e["c"].is_string()) {
            auto r = try_parse_rational(e["c"].get<std::string>());
            if (!r) {
                throw SchemaError("not a rational: '" + e["c"].get<std::string>() + "'");
            }
            c = *r;
        } else if (e["c"].is_number_integer()) {
            c = rat(e["c"].get<long long>());
        } else {
            throw SchemaError("entry field c must be a rational string or integer");
        }
        sc.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1),
              static_cast<std::size_t>(k - 1)) = c;
    }
    return sc;
}

// ---------------------------------------------------------------------------
// dispatch

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for associator defect modules"};
    app.name("nalg");
    app.require_subcommand(0, 1);
    bool json = false;
    app.add_flag("--json", json, "emit the canonical JSON report");

    std::string classify_vec;
    auto* sc_classify = app.add_subcommand(
        "classify", "classify the module generated by a coefficient vector");
    sc_classify->add_option("vector", classify_vec, "six comma-separated rationals")
        ->required();
    sc_classify->add_flag("--json", json, "emit the canonical JSON report");

    std::string analyze_token;
    auto* sc_analyze = app.add_subcommand(
        "analyze", "analyze a builtin algebra or a JSON structure-constant file");
    sc_analyze->add_option("algebra", analyze_token, "builtin name or file path")
        ->required();
    sc_analyze->add_flag("--json", json, "emit the canonical JSON report");

    std::string dual_type;
    std::string dual_vec;
    std::string dual_t;
    auto* sc_dual =
        app.add_subcommand("dual", "verify the dual relation table for a type");
    sc_dual->add_option("type", dual_type, "type label, e.g. IV_2 or III_1(t=2)");
    sc_dual->add_option("--vector", dual_vec, "six comma-separated rationals");
    sc_dual->add_option("--t", dual_t, "parameter for parametric families");
    sc_dual->add_flag("--json", json, "emit the canonical JSON report");

    std::string tensor_a;
    std::string tensor_b;
    auto* sc_tensor =
        app.add_subcommand("tensor", "analyze the tensor product of two algebras");
    sc_tensor->add_option("left", tensor_a, "builtin name or file path")->required();
    sc_tensor->add_option("right", tensor_b, "builtin name or file path")->required();
    sc_tensor->add_flag("--json", json, "emit the canonical JSON report");

    std::string vw_v;
    std::string vw_w;
    std::string vw_algebra;
    auto* sc_vw = app.add_subcommand(
        "vw-check", "check the paired identities and search for a certificate");
    sc_vw->alias("vw");
    sc_vw->add_option("v", vw_v, "six comma-separated rationals")->required();
    sc_vw->add_option("w", vw_w, "six comma-separated rationals")->required();
    sc_vw->add_option("algebra", vw_algebra, "optional builtin name or file path");
    sc_vw->add_flag("--json", json, "emit the canonical JSON report");

    auto* sc_selftest =
        app.add_subcommand("selftest", "run the recorded anchor suite");
    sc_selftest->add_flag("--json", json, "emit the canonical JSON report");

    std::vector<const char*> argv;
    argv.push_back("nalg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sc_classify->parsed()) return cmd_classify(classify_vec, json, out);
        if (sc_analyze->parsed()) return cmd_analyze(analyze_token, json, out);
        if (sc_dual->parsed()) return cmd_dual(dual_type, dual_vec, dual_t, json, out, err);
        if (sc_tensor->parsed()) return cmd_tensor(tensor_a, tensor_b, json, out);
        if (sc_vw->parsed()) return cmd_vw_check(vw_v, vw_w, vw_algebra, json, out);
        if (sc_selftest->parsed()) return cmd_selftest(json, out);
        out << app.help();
        return 2;
    } catch (const UnknownName& e) {
        err << "error: unknown algebra: " << e.what() << "\n";
        return 3;
    } catch (const UnknownType& e) {
        err << "error: unknown type: " << e.what() << "\n";
        return 3;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroVector& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintViolated& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace nalg::cli
