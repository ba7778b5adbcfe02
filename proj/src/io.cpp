#include "triclique/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace triclique {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

using ordered_json = nlohmann::ordered_json;

nlohmann::json parse_json(const std::string& text, const char* what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw InputError(std::string(what) + ": malformed JSON document");
    return j;
}

std::vector<std::string> string_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InputError(std::string("context: key '") + key +
                         "' must be an array of labels");
    std::vector<std::string> out;
    for (const auto& v : j[key]) {
        if (!v.is_string())
            throw InputError(std::string("context: key '") + key +
                             "' must contain strings only");
        out.push_back(v.get<std::string>());
    }
    return out;
}

} // namespace

TriContext context_from_csv(const std::string& text) {
    std::vector<std::string> axes[3];
    std::vector<std::array<std::string, 3>> triples;
    auto declare = [&](int axis, const std::string& label) {
        for (const auto& l : axes[axis])
            if (l == label) return;
        axes[axis].push_back(label);
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::array<std::string, 3> fields;
        size_t start = 0;
        int n = 0;
        for (size_t i = 0; i <= t.size(); ++i) {
            if (i == t.size() || t[i] == ',') {
                if (n >= 3)
                    throw InputError("csv line " + std::to_string(lineno) +
                                     ": expected exactly 3 fields");
                fields[n++] = trim(t.substr(start, i - start));
                start = i + 1;
            }
        }
        if (n != 3)
            throw InputError("csv line " + std::to_string(lineno) +
                             ": expected exactly 3 fields");
        for (int a = 0; a < 3; ++a) {
            if (fields[a].empty())
                throw InputError("csv line " + std::to_string(lineno) +
                                 ": empty label");
            declare(a, fields[a]);
        }
        triples.push_back(fields);
    }
    return TriContext(axes[0], axes[1], axes[2], triples);
}

TriContext context_from_json(const std::string& text) {
    auto j = parse_json(text, "context");
    auto objects = string_array(j, "objects");
    auto attributes = string_array(j, "attributes");
    auto conditions = string_array(j, "conditions");
    if (!j.contains("triples") || !j["triples"].is_array())
        throw InputError("context: key 'triples' must be an array");
    std::vector<std::array<std::string, 3>> triples;
    for (const auto& t : j["triples"]) {
        if (!t.is_array() || t.size() != 3)
            throw InputError("context: each triple must be a 3-element array");
        triples.push_back(
            {t[0].get<std::string>(), t[1].get<std::string>(),
             t[2].get<std::string>()});
    }
    return TriContext(objects, attributes, conditions, triples);
}

std::string context_to_json(const TriContext& k) {
    ordered_json j;
    j["objects"] = k.labels(0);
    j["attributes"] = k.labels(1);
    j["conditions"] = k.labels(2);
    auto triples = ordered_json::array();
    for (const auto& [g, m, b] : k.incidence_triples())
        triples.push_back({k.label(0, g), k.label(1, m), k.label(2, b)});
    j["triples"] = triples;
    return j.dump(2) + "\n";
}

Mrd mrd_from_json(const std::string& text) {
    auto j = parse_json(text, "mrd");
    auto types = string_array(j, "entity_types");
    if (!j.contains("entities") || !j["entities"].is_object())
        throw InputError("mrd: key 'entities' must map type names to label arrays");
    std::vector<std::vector<std::string>> entities(types.size());
    for (size_t t = 0; t < types.size(); ++t) {
        if (!j["entities"].contains(types[t])) continue;
        for (const auto& v : j["entities"][types[t]])
            entities[t].push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> rel;
    if (!j.contains("relationship_types") || !j["relationship_types"].is_array())
        throw InputError("mrd: key 'relationship_types' must be an array of pairs");
    for (const auto& p : j["relationship_types"]) {
        if (!p.is_array() || p.size() != 2)
            throw InputError("mrd: each relationship type must be a 2-element array");
        rel.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError("mrd: key 'edges' must be an array of pairs");
    for (const auto& p : j["edges"]) {
        if (!p.is_array() || p.size() != 2)
            throw InputError("mrd: each edge must be a 2-element array");
        edges.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return Mrd(types, entities, rel, edges);
}

std::string mrd_to_json(const Mrd& d) {
    ordered_json j;
    j["entity_types"] = d.type_names();
    ordered_json ents = ordered_json::object();
    for (int t = 0; t < d.type_count(); ++t) {
        auto arr = ordered_json::array();
        for (int e : d.entities_of_type(t)) arr.push_back(d.label(e));
        ents[d.type_names()[t]] = arr;
    }
    j["entities"] = ents;
    auto rel = ordered_json::array();
    for (const auto& [a, b] : d.relationship_type_pairs()) rel.push_back({a, b});
    j["relationship_types"] = rel;
    auto edges = ordered_json::array();
    for (auto [a, b] : d.edge_list())
        edges.push_back({d.qualified_label(a), d.qualified_label(b)});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

InputKind sniff_input(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object()) {
        if (j.contains("entity_types")) return InputKind::mrd_json;
        if (j.contains("triples")) return InputKind::context_json;
        throw InputError("input: JSON document is neither a context nor an mrd");
    }
    return InputKind::context_csv;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace triclique
