#include "triclique/mrd.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace triclique {

Mrd::Mrd(std::vector<std::string> type_names,
         const std::vector<std::vector<std::string>>& entities_per_type,
         const std::vector<std::pair<std::string, std::string>>& relationship_types,
         const std::vector<std::pair<std::string, std::string>>& edges)
    : type_names_(std::move(type_names)) {
    const int nt = type_count();
    if (static_cast<int>(entities_per_type.size()) != nt)
        throw InputError("mrd: one entity list per declared type required");
    {
        std::set<std::string> seen(type_names_.begin(), type_names_.end());
        if (static_cast<int>(seen.size()) != nt)
            throw InputError("mrd: duplicate entity type name");
    }
    auto type_index = [&](const std::string& name) {
        for (int t = 0; t < nt; ++t)
            if (type_names_[t] == name) return t;
        throw InputError("mrd: unknown entity type '" + name + "'");
    };

    // Entities ordered by (type, label).
    for (int t = 0; t < nt; ++t) {
        std::vector<std::string> sorted = entities_per_type[t];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("mrd: duplicate entity label within type '" +
                             type_names_[t] + "'");
        for (auto& l : sorted) {
            labels_.push_back(l);
            type_of_.push_back(t);
        }
    }
    if (entity_count() > SmallSet::kMaxGround)
        throw InputError("mrd: entity ground set exceeds 64 elements");

    rel_.assign(nt, std::vector<bool>(nt, false));
    for (const auto& [a, b] : relationship_types) {
        int s = type_index(a), t = type_index(b);
        if (s == t)
            throw InputError("mrd: relationship types between a type and itself "
                             "are not allowed");
        rel_[s][t] = rel_[t][s] = true;
    }

    type_mask_.assign(nt, {});
    for (int e = 0; e < entity_count(); ++e)
        type_mask_[type_of_[e]] = type_mask_[type_of_[e]].with(e);
    rel_partners_.assign(nt, {});
    for (int s = 0; s < nt; ++s)
        for (int t = 0; t < nt; ++t)
            if (rel_[s][t]) rel_partners_[s] = rel_partners_[s] | type_mask_[t];

    adj_.assign(entity_count(), {});
    for (const auto& [a, b] : edges) {
        int ea = entity_index(a), eb = entity_index(b);
        if (ea == eb) throw InputError("mrd: degenerate edge");
        if (!rel_[type_of_[ea]][type_of_[eb]])
            throw InputError("mrd: edge '" + a + "' -- '" + b +
                             "' has no declared relationship type");
        adj_[ea] = adj_[ea].with(eb);
        adj_[eb] = adj_[eb].with(ea);
    }
}

std::vector<std::pair<std::string, std::string>> Mrd::relationship_type_pairs()
    const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int s = 0; s < type_count(); ++s)
        for (int t = s + 1; t < type_count(); ++t)
            if (rel_[s][t]) out.emplace_back(type_names_[s], type_names_[t]);
    return out;
}

std::vector<std::pair<int, int>> Mrd::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < entity_count(); ++e)
        for (int f : adj_[e])
            if (e < f) out.emplace_back(e, f);
    return out;
}

int Mrd::entity_index(const std::string& type_name, const std::string& label) const {
    for (int e = 0; e < entity_count(); ++e)
        if (labels_[e] == label && type_names_[type_of_[e]] == type_name) return e;
    throw InputError("mrd: unknown entity '" + type_name + ":" + label + "'");
}

int Mrd::entity_index(const std::string& qualified) const {
    auto pos = qualified.find(':');
    if (pos == std::string::npos)
        throw InputError("mrd: entity reference '" + qualified +
                         "' must be written type:label");
    return entity_index(qualified.substr(0, pos), qualified.substr(pos + 1));
}

bool is_complete(const Mrd& d, SmallSet f) {
    if (!f.subset_of(SmallSet::full(d.entity_count())))
        throw InputError("mrd: subset references an undeclared entity");
    for (int e : f) {
        SmallSet must = (f & d.relation_partners(d.type_of(e))).without(e);
        if (!must.subset_of(d.adjacency(e))) return false;
    }
    return true;
}

bool is_connected(const Mrd& d, SmallSet f) {
    if (!f.subset_of(SmallSet::full(d.entity_count())))
        throw InputError("mrd: subset references an undeclared entity");
    if (f.size() <= 1) return true;
    SmallSet reached = SmallSet::single(*f.begin());
    for (;;) {
        SmallSet frontier;
        for (int e : reached) frontier = frontier | (d.adjacency(e) & f);
        frontier = frontier - reached;
        if (frontier.empty()) break;
        reached = reached | frontier;
    }
    return reached == f;
}

bool is_ccs(const Mrd& d, SmallSet f) {
    return is_complete(d, f) && is_connected(d, f);
}

void require_ccs(const Mrd& d, SmallSet f, const char* where) {
    if (!is_ccs(d, f))
        throw InputError(std::string(where) +
                         ": argument is not complete and connected");
}

SmallSet comp(const Mrd& d, SmallSet f) {
    require_ccs(d, f, "comp");
    SmallSet out = f;
    for (int e = 0; e < d.entity_count(); ++e) {
        if (f.contains(e)) continue;
        SmallSet must = f & d.relation_partners(d.type_of(e));
        if (must.subset_of(d.adjacency(e))) out = out.with(e);
    }
    return out;
}

SmallSet aug(const Mrd& d, SmallSet f) {
    require_ccs(d, f, "aug");
    SmallSet compatible = comp(d, f);
    SmallSet out = f;
    for (int e : compatible - f) {
        bool connected = f.empty() || !(d.adjacency(e) & f).empty();
        if (connected) out = out.with(e);
    }
    return out;
}

SmallSet g_close(const Mrd& d, SmallSet f) {
    require_ccs(d, f, "g_close");
    SmallSet base = comp(d, f);
    SmallSet out = f;
    for (int e : aug(d, f) - f)
        if (comp(d, f.with(e)) == base) out = out.with(e);
    return out;
}

namespace {

void require_mrd_cap(const Mrd& d, const SizeCap& cap, const char* where) {
    if (d.entity_count() > cap.mrd_entities)
        throw ResourceError(std::string(where) + ": " +
                            std::to_string(d.entity_count()) +
                            " entities exceed the cap of " +
                            std::to_string(cap.mrd_entities));
}

} // namespace

std::vector<SmallSet> enumerate_mccs(const Mrd& d, const SizeCap& cap) {
    require_mrd_cap(d, cap, "enumerate_mccs");
    FamilyView family{d.entity_count(),
                      [&d](SmallSet s) { return is_ccs(d, s); }};
    // The listing starts from the empty set, whose g-image need not be a
    // CCS; it is mapped to itself and discarded by the maximality filter.
    auto fixpoints = list_closed_sets(family, [&d](SmallSet s) {
        return s.empty() ? s : g_close(d, s);
    });
    std::vector<SmallSet> out;
    for (SmallSet f : fixpoints) {
        if (f.empty()) continue;
        bool maximal = true;
        for (int e = 0; e < d.entity_count() && maximal; ++e)
            if (!f.contains(e) && is_ccs(d, f.with(e))) maximal = false;
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

ExplicitFamily ccs_family(const Mrd& d, const SizeCap& cap) {
    require_mrd_cap(d, cap, "ccs_family");
    ExplicitFamily fam;
    for (int e = 0; e < d.entity_count(); ++e)
        fam.ground.push_back(d.qualified_label(e));
    const std::uint64_t n = 1ull << d.entity_count();
    for (std::uint64_t bits = 0; bits < n; ++bits)
        if (is_ccs(d, SmallSet{bits})) fam.members.push_back(SmallSet{bits});
    fam.normalize();
    return fam;
}

FlatSet TripartiteEncoding::to_flat(SmallSet entities) const {
    FlatSet out;
    for (int e : entities) {
        auto [axis, i] = axis_index[e];
        if (axis == 0) out.objs = out.objs.with(i);
        else if (axis == 1) out.atts = out.atts.with(i);
        else out.conds = out.conds.with(i);
    }
    return out;
}

SmallSet TripartiteEncoding::to_entities(const FlatSet& s) const {
    SmallSet out;
    for (int e = 0; e < mrd.entity_count(); ++e) {
        auto [axis, i] = axis_index[e];
        bool in = axis == 0 ? s.objs.contains(i)
                 : axis == 1 ? s.atts.contains(i)
                             : s.conds.contains(i);
        if (in) out = out.with(e);
    }
    return out;
}

TripartiteEncoding encode_tripartite(const TriContext& k) {
    std::vector<std::string> types = {"objects", "attributes", "conditions"};
    std::vector<std::vector<std::string>> entities = {k.labels(0), k.labels(1),
                                                      k.labels(2)};
    std::vector<std::pair<std::string, std::string>> rel = {
        {"objects", "attributes"},
        {"objects", "conditions"},
        {"attributes", "conditions"}};
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& [g, m, b] : k.incidence_triples()) {
        edges.insert({"objects:" + k.label(0, g), "attributes:" + k.label(1, m)});
        edges.insert({"objects:" + k.label(0, g), "conditions:" + k.label(2, b)});
        edges.insert(
            {"attributes:" + k.label(1, m), "conditions:" + k.label(2, b)});
    }
    std::vector<std::pair<std::string, std::string>> edge_list(edges.begin(),
                                                               edges.end());
    TripartiteEncoding enc{Mrd(types, entities, rel, edge_list), {}};
    enc.axis_index.resize(enc.mrd.entity_count());
    for (int e = 0; e < enc.mrd.entity_count(); ++e) {
        int axis = enc.mrd.type_of(e);
        enc.axis_index[e] = {axis, k.index_of(axis, enc.mrd.label(e))};
    }
    return enc;
}

std::vector<std::array<int, 3>> phantom_edges(const TriContext& k) {
    // Pairwise projections of the incidence.
    auto pair_gm = [&](int g, int m) { return !k.fiber(2, g, m).empty(); };
    auto pair_gb = [&](int g, int b) { return !k.fiber(1, g, b).empty(); };
    auto pair_mb = [&](int m, int b) { return !k.fiber(0, m, b).empty(); };
    std::vector<std::array<int, 3>> out;
    for (int g = 0; g < k.size(0); ++g)
        for (int m = 0; m < k.size(1); ++m)
            for (int b = 0; b < k.size(2); ++b)
                if (!k.has(g, m, b) && pair_gm(g, m) && pair_gb(g, b) &&
                    pair_mb(m, b))
                    out.push_back({g, m, b});
    return out;
}

namespace {

Triconcept close_by_cascade(const TriContext& k, const Triset& s) {
    std::array<SmallSet, 3> comps = s.comps();
    for (int a : {0, 1, 2}) comps[a] = derive_product(k, a, comps);
    return {comps[0], comps[1], comps[2]};
}

} // namespace

std::optional<Triconcept> mccs_to_triset(const TriContext& k,
                                         const TripartiteEncoding& enc,
                                         SmallSet mccs) {
    if (!is_ccs(enc.mrd, mccs))
        throw InputError("mccs_to_triset: argument is not a CCS");
    for (int e = 0; e < enc.mrd.entity_count(); ++e)
        if (!mccs.contains(e) && is_ccs(enc.mrd, mccs.with(e)))
            throw InputError("mccs_to_triset: argument is not maximal");

    Triset t = tuple_of(enc.to_flat(mccs));
    auto phantoms = phantom_edges(k);
    auto is_phantom = [&](int g, int m, int b) {
        for (const auto& p : phantoms)
            if (p[0] == g && p[1] == m && p[2] == b) return true;
        return false;
    };
    // Product of the tuple minus the phantom triples. Completeness of the
    // MCCS puts every remaining triple inside the incidence.
    std::vector<std::array<int, 3>> remainder;
    for (int g : t.x)
        for (int m : t.y)
            for (int b : t.z)
                if (!is_phantom(g, m, b)) remainder.push_back({g, m, b});

    Triset candidate;
    if (remainder.empty()) {
        candidate = t; // empty product; the closure check decides
    } else {
        for (const auto& [g, m, b] : remainder) {
            candidate.x = candidate.x.with(g);
            candidate.y = candidate.y.with(m);
            candidate.z = candidate.z.with(b);
        }
        if (candidate.product_size() != static_cast<long long>(remainder.size()))
            return std::nullopt; // remainder is not a product
        for (const auto& [g, m, b] : remainder)
            if (!k.has(g, m, b)) return std::nullopt;
    }
    if (!is_triset(k, candidate)) return std::nullopt;
    Triconcept closed = close_by_cascade(k, candidate);
    if (!(closed == candidate)) return std::nullopt;
    return candidate;
}

Mrd add_isolated_elements(const Mrd& d) {
    std::vector<bool> has_isolated(d.type_count(), false);
    for (int e = 0; e < d.entity_count(); ++e)
        if (d.adjacency(e).empty()) has_isolated[d.type_of(e)] = true;

    bool all = true;
    for (bool b : has_isolated) all = all && b;
    if (all) return d;

    std::vector<std::vector<std::string>> entities(d.type_count());
    for (int e = 0; e < d.entity_count(); ++e)
        entities[d.type_of(e)].push_back(d.label(e));
    for (int t = 0; t < d.type_count(); ++t) {
        if (has_isolated[t]) continue;
        std::string fresh = "e0";
        int n = 0;
        while (std::find(entities[t].begin(), entities[t].end(), fresh) !=
               entities[t].end())
            fresh = "e0_" + std::to_string(++n);
        entities[t].push_back(fresh);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : d.edge_list())
        edges.emplace_back(d.qualified_label(a), d.qualified_label(b));
    return Mrd(d.type_names(), entities, d.relationship_type_pairs(), edges);
}

std::optional<SmallSet> closed_non_maximal_witness(const Mrd& d,
                                                   const SizeCap& cap) {
    auto mccs = enumerate_mccs(d, cap);
    for (size_t i = 0; i < mccs.size(); ++i)
        for (size_t j = i + 1; j < mccs.size(); ++j) {
            SmallSet x = mccs[i] & mccs[j];
            if (x.empty() || !is_ccs(d, x)) continue;
            if (g_close(d, x) == x) return x;
        }
    return std::nullopt;
}

} // namespace triclique
