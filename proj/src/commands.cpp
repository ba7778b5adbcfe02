#include "triclique/commands.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "triclique/closure.hpp"
#include "triclique/enumerate.hpp"
#include "triclique/io.hpp"

namespace triclique {

namespace {

using ordered_json = nlohmann::ordered_json;

SizeCap effective_cap(const CliOptions& opts) {
    SizeCap cap;
    if (const char* env = std::getenv("TRICLIQUE_SIZE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) {
            cap.per_axis = v;
            cap.mrd_entities = std::max(cap.mrd_entities, 3 * v);
        }
    }
    if (opts.size_cap) {
        cap.per_axis = *opts.size_cap;
        cap.mrd_entities = std::max(18, 3 * *opts.size_cap);
    }
    return cap;
}

struct LoadedInput {
    std::string source;  // path or generator string
    std::string digest;
    std::string kind;    // context | mrd | generated-context
    std::optional<TriContext> context;
    std::optional<Mrd> mrd;
};

LoadedInput load_input(const CliOptions& opts, const SizeCap& cap) {
    LoadedInput in;
    if (!opts.gen.empty()) {
        auto pos = opts.gen.find(':');
        if (pos == std::string::npos)
            throw InputError("--gen expects power:N or diag:M");
        std::string family = opts.gen.substr(0, pos);
        int n = std::atoi(opts.gen.substr(pos + 1).c_str());
        if (n < 1) throw InputError("--gen size must be a positive integer");
        if (n > cap.per_axis)
            throw ResourceError("--gen " + opts.gen +
                                " exceeds the size cap of " +
                                std::to_string(cap.per_axis) +
                                " entities per axis");
        if (family == "power") in.context = power_context(n);
        else if (family == "diag") in.context = diagonal_context(n);
        else throw InputError("--gen expects power:N or diag:M");
        in.source = opts.gen;
        in.digest = content_digest(opts.gen);
        in.kind = "generated-context";
        return in;
    }
    if (opts.input_path.empty())
        throw InputError("an input file or --gen is required");
    std::string text = read_file(opts.input_path);
    in.source = opts.input_path;
    in.digest = content_digest(text);
    switch (sniff_input(text)) {
        case InputKind::context_csv:
            in.context = context_from_csv(text);
            in.kind = "context";
            break;
        case InputKind::context_json:
            in.context = context_from_json(text);
            in.kind = "context";
            break;
        case InputKind::mrd_json:
            in.mrd = mrd_from_json(text);
            in.kind = "mrd";
            break;
    }
    return in;
}

ordered_json label_array(const TriContext& k, int axis, SmallSet s) {
    auto arr = ordered_json::array();
    for (int i : s) arr.push_back(k.label(axis, i));
    return arr;
}

ordered_json triset_json(const TriContext& k, const Triset& t) {
    ordered_json j;
    j["extent"] = label_array(k, 0, t.x);
    j["intent"] = label_array(k, 1, t.y);
    j["modus"] = label_array(k, 2, t.z);
    return j;
}

ordered_json entity_set_json(const Mrd& d, SmallSet s) {
    auto arr = ordered_json::array();
    for (int e : s) arr.push_back(d.qualified_label(e));
    return arr;
}

const TriContext& require_context(const LoadedInput& in, const char* cmd) {
    if (!in.context)
        throw InputError(std::string(cmd) + ": a tricontext input is required");
    return *in.context;
}

ordered_json base_report(const CliOptions& opts, const LoadedInput& in) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = opts.command;
    j["input"] = {{"source", in.source}, {"digest", in.digest}, {"kind", in.kind}};
    return j;
}

// ---- triconcepts ---------------------------------------------------------

int cmd_triconcepts(const CliOptions& opts, const LoadedInput& in,
                    const SizeCap& cap, ordered_json& report) {
    const TriContext& k = require_context(in, "triconcepts");
    report["options"] = {{"method", opts.method}};
    ordered_json result;
    std::optional<std::vector<Triconcept>> brute, fixpoint;
    if (opts.method == "brute" || opts.method == "both")
        brute = brute_force_triconcepts(k, cap);
    if (opts.method == "fixpoint" || opts.method == "both")
        fixpoint = fixpoint_triconcepts(k, cap);
    if (!brute && !fixpoint)
        throw InputError("--method expects brute, fixpoint or both");
    const auto& primary = brute ? *brute : *fixpoint;
    auto arr = ordered_json::array();
    for (const auto& c : primary) arr.push_back(triset_json(k, c));
    result["triconcepts"] = arr;
    result["count"] = primary.size();
    int exit_code = kExitOk;
    if (brute && fixpoint) {
        bool agree = *brute == *fixpoint;
        result["methods_agree"] = agree;
        if (!agree) exit_code = kExitDisagreement;
    }
    report["result"] = result;
    return exit_code;
}

// ---- switching -----------------------------------------------------------

int cmd_switching(const CliOptions& opts, const LoadedInput& in,
                  const SizeCap& cap, ordered_json& report) {
    const TriContext& k = require_context(in, "switching");
    report["options"] = {{"count_convention", opts.count_convention}};
    CountConvention conv;
    if (opts.count_convention == "product") conv = CountConvention::product;
    else if (opts.count_convention == "componentwise")
        conv = CountConvention::componentwise;
    else throw InputError("--count-convention expects product or componentwise");

    ordered_json result;
    auto gens = switching_generators(k, cap);
    auto arr = ordered_json::array();
    for (const auto& g : gens) {
        ordered_json gj;
        gj["triset"] = triset_json(k, g.triset);
        auto ws = ordered_json::array();
        for (const auto& [c1, c2] : g.witnesses)
            ws.push_back({triset_json(k, c1), triset_json(k, c2)});
        gj["witnesses"] = ws;
        arr.push_back(gj);
    }
    result["generators"] = arr;
    result["count"] = count_switching_generators(k, conv, cap);
    if (!opts.gen.empty() && opts.gen.rfind("power:", 0) == 0) {
        int n = std::atoi(opts.gen.substr(6).c_str());
        result["closed_form"] = switching_generator_closed_form(n);
        result["triple_sum"] = switching_generator_triple_sum(n);
    }
    report["result"] = result;
    return kExitOk;
}

// ---- mccs ----------------------------------------------------------------

int cmd_mccs(const CliOptions& opts, const LoadedInput& in, const SizeCap& cap,
             ordered_json& report) {
    (void)opts;
    ordered_json result;
    if (in.mrd) {
        const Mrd& d = *in.mrd;
        auto arr = ordered_json::array();
        for (SmallSet m : enumerate_mccs(d, cap))
            arr.push_back(entity_set_json(d, m));
        result["mccs"] = arr;
        report["result"] = result;
        return kExitOk;
    }
    const TriContext& k = require_context(in, "mccs");
    auto enc = encode_tripartite(k);
    result["encoding"] = {{"entities", enc.mrd.entity_count()},
                          {"edges", enc.mrd.edge_list().size()}};
    auto mccs = enumerate_mccs(enc.mrd, cap);
    auto marr = ordered_json::array();
    for (SmallSet m : mccs) marr.push_back(entity_set_json(enc.mrd, m));
    result["mccs"] = marr;

    auto parr = ordered_json::array();
    for (const auto& [g, m, b] : phantom_edges(k))
        parr.push_back({k.label(0, g), k.label(1, m), k.label(2, b)});
    result["phantom_edges"] = parr;

    std::vector<Triconcept> repaired;
    auto rarr = ordered_json::array();
    for (SmallSet m : mccs) {
        ordered_json rj;
        rj["mccs"] = entity_set_json(enc.mrd, m);
        auto t = mccs_to_triset(k, enc, m);
        if (t) {
            rj["status"] = "repaired";
            rj["triconcept"] = triset_json(k, *t);
            repaired.push_back(*t);
        } else {
            rj["status"] = "deleted";
        }
        rarr.push_back(rj);
    }
    result["repairs"] = rarr;

    if (auto w = closed_non_maximal_witness(enc.mrd, cap)) {
        result["g_fixed_non_maximal"] = entity_set_json(enc.mrd, *w);
    } else {
        result["g_fixed_non_maximal"] = nullptr;
    }

    // Oracle comparison: repaired triconcepts against the full-component
    // triconcepts of the source context. Disagreement is a warning only.
    std::vector<Triconcept> expected;
    for (const auto& c : brute_force_triconcepts(k, cap))
        if (!c.product_empty()) expected.push_back(c);
    std::sort(repaired.begin(), repaired.end(), canonical_less);
    auto warnings = ordered_json::array();
    if (repaired != expected) {
        ordered_json w;
        w["kind"] = "repair-oracle-disagreement";
        auto earr = ordered_json::array();
        for (const auto& c : expected) earr.push_back(triset_json(k, c));
        w["full_component_triconcepts"] = earr;
        warnings.push_back(w);
    }
    result["warnings"] = warnings;
    report["result"] = result;
    return kExitOk;
}

// ---- check ---------------------------------------------------------------

ordered_json family_verdicts(const ExplicitFamily& fam) {
    ordered_json j;
    j["accessible"] = is_accessible(fam);
    j["independence_system"] = is_independence_system(fam);
    j["confluent"] = is_confluent(fam, ConfluenceReading::nonempty_common);
    j["confluent_printed_reading"] = is_confluent(fam, ConfluenceReading::printed);
    j["strongly_accessible"] = is_strongly_accessible(fam);
    j["closure_system"] = is_closure_system(fam);
    return j;
}

int cmd_check(const CliOptions& opts, const LoadedInput& in, const SizeCap& cap,
              ordered_json& report) {
    (void)opts;
    const TriContext& k = require_context(in, "check");
    ordered_json result;

    bool extensive = true, idempotent = true, sigma123_is_h = true;
    for (const auto& s : enumerate_trisets(k, cap)) {
        Triconcept c = h_close(k, s);
        extensive = extensive && triset_leq(s, c);
        idempotent = idempotent && h_close(k, c) == c;
        sigma123_is_h = sigma123_is_h && sigma_close(k, {{0, 1, 2}}, s) == c;
        for (const auto& ord : all_orderings()) {
            Triconcept sc = sigma_close(k, ord, s);
            extensive = extensive && triset_leq(s, sc);
            idempotent = idempotent && sigma_close(k, ord, sc) == sc;
        }
    }
    result["closure_extensive"] = extensive;
    result["closure_idempotent"] = idempotent;
    result["sigma_123_equals_h"] = sigma123_is_h;

    auto witness_json = [&](const std::optional<MonotonicityWitness>& w) {
        if (!w) return ordered_json(nullptr);
        ordered_json j;
        j["lower"] = triset_json(k, w->lower);
        j["upper"] = triset_json(k, w->upper);
        j["closed_lower"] = triset_json(k, w->closed_lower);
        j["closed_upper"] = triset_json(k, w->closed_upper);
        return j;
    };
    result["monotonicity_witness_full"] =
        witness_json(find_monotonicity_witness(k, {{0, 1, 2}}, TrisetDomain::full, cap));
    result["monotonicity_witness_weeded"] = witness_json(
        find_monotonicity_witness(k, {{0, 1, 2}}, TrisetDomain::weeded, cap));

    if (auto nc = check_non_commutativity(k, cap)) {
        ordered_json j;
        j["orderings"] = {nc->first.name(), nc->second.name()};
        j["input"] = triset_json(k, nc->input);
        result["non_commutativity_witness"] = j;
    } else {
        result["non_commutativity_witness"] = nullptr;
    }

    if (auto ngc = no_global_closure_condition(k, cap)) {
        ordered_json j;
        j["concept_1"] = triset_json(k, ngc->c1);
        j["concept_2"] = triset_json(k, ngc->c2);
        j["shared_generator"] = triset_json(k, ngc->shared);
        result["no_global_closure_condition"] = j;
    } else {
        result["no_global_closure_condition"] = nullptr;
    }

    WeededSystem weeded = weeded_system(k, cap);
    result["weeded_flat_family"] = family_verdicts(weeded.flat_family(true));
    result["weeded_flat_family_without_empty"] =
        family_verdicts(weeded.flat_family(false));
    result["ccs_family"] = family_verdicts(ccs_family(encode_tripartite(k).mrd, cap));

    report["result"] = result;
    return kExitOk;
}

// ---- table rendering -----------------------------------------------------

void render_table(const ordered_json& j, std::ostream& out, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                render_table(value, out, indent + 2);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                render_table(value, out, indent + 2);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

} // namespace

CliResult run_command(const CliOptions& opts) {
    try {
        SizeCap cap = effective_cap(opts);
        LoadedInput in = load_input(opts, cap);
        ordered_json report = base_report(opts, in);
        int exit_code;
        if (opts.command == "triconcepts")
            exit_code = cmd_triconcepts(opts, in, cap, report);
        else if (opts.command == "switching")
            exit_code = cmd_switching(opts, in, cap, report);
        else if (opts.command == "mccs")
            exit_code = cmd_mccs(opts, in, cap, report);
        else if (opts.command == "check")
            exit_code = cmd_check(opts, in, cap, report);
        else
            throw InputError("unknown command '" + opts.command + "'");

        std::ostringstream out;
        if (opts.format == "table") {
            render_table(report, out);
        } else if (opts.format == "structured") {
            out << report.dump(2) << "\n";
        } else {
            throw InputError("--format expects table or structured");
        }
        return {exit_code, out.str()};
    } catch (const ResourceError& e) {
        return {kExitResource, std::string("error: ") + e.what() + "\n"};
    } catch (const InputError& e) {
        return {kExitParse, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace triclique
