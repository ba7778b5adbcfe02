#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triclique/context.hpp"
#include "triclique/set_family.hpp"

namespace triclique {

/// A multi-relational database: typed entities with typed, unordered binary
/// relationship edges (a k-partite graph). No relationship type may pair a
/// type with itself. Immutable after construction.
class Mrd {
public:
    Mrd(std::vector<std::string> type_names,
        const std::vector<std::vector<std::string>>& entities_per_type,
        const std::vector<std::pair<std::string, std::string>>& relationship_types,
        const std::vector<std::pair<std::string, std::string>>& edges);

    int type_count() const { return static_cast<int>(type_names_.size()); }
    const std::vector<std::string>& type_names() const { return type_names_; }
    int entity_count() const { return static_cast<int>(labels_.size()); }
    int type_of(int e) const { return type_of_[e]; }
    const std::string& label(int e) const { return labels_[e]; }
    std::string qualified_label(int e) const {
        return type_names_[type_of_[e]] + ":" + labels_[e];
    }
    SmallSet adjacency(int e) const { return adj_[e]; }
    SmallSet entities_of_type(int t) const { return type_mask_[t]; }
    bool related_types(int s, int t) const { return rel_[s][t]; }
    /// Entities whose type forms a relationship type with `t`.
    SmallSet relation_partners(int t) const { return rel_partners_[t]; }
    std::vector<std::pair<std::string, std::string>> relationship_type_pairs() const;
    std::vector<std::pair<int, int>> edge_list() const;

    int entity_index(const std::string& type_name, const std::string& label) const;
    int entity_index(const std::string& qualified) const; // "type:label"

private:
    std::vector<std::string> type_names_;
    std::vector<std::string> labels_;
    std::vector<int> type_of_;
    std::vector<SmallSet> adj_;
    std::vector<SmallSet> type_mask_;
    std::vector<SmallSet> rel_partners_;
    std::vector<std::vector<bool>> rel_;
};

/// Every pair inside `f` whose type pair is a relationship type is an edge.
bool is_complete(const Mrd& d, SmallSet f);

/// `f` induces a connected subgraph; singletons and the empty set count as
/// connected (the empty set is a CCS so the listing driver can start there).
bool is_connected(const Mrd& d, SmallSet f);

bool is_ccs(const Mrd& d, SmallSet f);
void require_ccs(const Mrd& d, SmallSet f, const char* where);

/// Compatible entities: {e | f + e is complete}. Contains f.
SmallSet comp(const Mrd& d, SmallSet f);

/// Valid augmentations: {e | f + e is complete and connected}. Contains f.
SmallSet aug(const Mrd& d, SmallSet f);

/// {e in aug(f) | comp(f + e) = comp(f)}. On non-empty CCSs the result is a
/// CCS and the operator is extensive and monotone; it is idempotent when
/// every type has an isolated entity. At the empty set the image can leave
/// the family (every entity is vacuously compatible with nothing).
SmallSet g_close(const Mrd& d, SmallSet f);

/// All maximal complete connected subsets, canonically sorted. Runs the
/// generic closed-set listing over the CCS family (strongly accessible)
/// and keeps the fixpoints no entity can extend.
std::vector<SmallSet> enumerate_mccs(const Mrd& d, const SizeCap& cap = {});

/// The fully materialized CCS family over the entity ground set.
ExplicitFamily ccs_family(const Mrd& d, const SizeCap& cap = {});

/// A tripartite graph encoding of a tricontext, with the index mapping
/// between encoded entities and context axes.
struct TripartiteEncoding {
    Mrd mrd;
    std::vector<std::pair<int, int>> axis_index; // entity -> (axis, index)

    FlatSet to_flat(SmallSet entities) const;
    SmallSet to_entities(const FlatSet& s) const;
};

/// Three entity types, all three relationship types, one edge per pairwise
/// projection of each incidence triple. Isolated entities are preserved.
TripartiteEncoding encode_tripartite(const TriContext& k);

/// Triples absent from the incidence whose three pairwise projections all
/// appear in the tripartite encoding.
std::vector<std::array<int, 3>> phantom_edges(const TriContext& k);

/// Tests whether an MCCS of the encoding decodes to a triconcept: removes
/// the phantom triples from the product of its tuple and checks that the
/// remainder is itself a product the closure fixes. Returns the triconcept
/// or nullopt (the MCCS is dropped from decoded output).
std::optional<Triconcept> mccs_to_triset(const TriContext& k,
                                         const TripartiteEncoding& enc,
                                         SmallSet mccs);

/// Adds one fresh isolated entity to every type that has none. On the
/// result the g operator is idempotent.
Mrd add_isolated_elements(const Mrd& d);

/// A g-fixed CCS that is not maximal: the non-empty intersection of two
/// maximal CCSs, when one exists.
std::optional<SmallSet> closed_non_maximal_witness(const Mrd& d,
                                                   const SizeCap& cap = {});

} // namespace triclique
