#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triclique/errors.hpp"
#include "triclique/small_set.hpp"

namespace triclique {

/// The three axes of a triadic context.
enum class Role { object = 0, attribute = 1, condition = 2 };

constexpr const char* role_name(Role r) {
    switch (r) {
        case Role::object: return "object";
        case Role::attribute: return "attribute";
        default: return "condition";
    }
}

/// A role-tagged entity. The same label on two different axes denotes two
/// distinct entities.
struct EntityRef {
    Role role;
    std::string name;
    friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

/// A triple of subsets, one per axis. Depending on where it is produced it
/// is a plain triple, a triset (product inside the incidence) or a
/// triconcept (maximal such triple); the predicates below tell them apart.
struct Triset {
    SmallSet x, y, z;

    SmallSet& axis(int a) { return a == 0 ? x : a == 1 ? y : z; }
    SmallSet axis(int a) const { return a == 0 ? x : a == 1 ? y : z; }
    std::array<SmallSet, 3> comps() const { return {x, y, z}; }

    bool product_empty() const { return x.empty() || y.empty() || z.empty(); }
    long long product_size() const {
        return 1ll * x.size() * y.size() * z.size();
    }
    /// Component-wise inclusion. For trisets with non-empty products this
    /// coincides with product inclusion.
    bool componentwise_subset_of(const Triset& o) const {
        return x.subset_of(o.x) && y.subset_of(o.y) && z.subset_of(o.z);
    }
    friend bool operator==(const Triset&, const Triset&) = default;
};

using Triconcept = Triset;

/// Role-tagged disjoint union of three subsets. Keeps same-label entities of
/// different roles distinct by construction.
struct FlatSet {
    SmallSet objs, atts, conds;

    int size() const { return objs.size() + atts.size() + conds.size(); }
    bool empty() const { return objs.empty() && atts.empty() && conds.empty(); }
    bool subset_of(const FlatSet& o) const {
        return objs.subset_of(o.objs) && atts.subset_of(o.atts) &&
               conds.subset_of(o.conds);
    }
    friend FlatSet operator&(const FlatSet& a, const FlatSet& b) {
        return {a.objs & b.objs, a.atts & b.atts, a.conds & b.conds};
    }
    friend FlatSet operator|(const FlatSet& a, const FlatSet& b) {
        return {a.objs | b.objs, a.atts | b.atts, a.conds | b.conds};
    }
    friend bool operator==(const FlatSet&, const FlatSet&) = default;
};

inline FlatSet flat(const Triset& t) { return {t.x, t.y, t.z}; }
inline Triset tuple_of(const FlatSet& s) { return {s.objs, s.atts, s.conds}; }

/// A triadic context: three named, ordered ground sets plus a ternary
/// incidence relation. Immutable after construction; every operation on it
/// is a pure function.
class TriContext {
public:
    TriContext(std::vector<std::string> objects,
               std::vector<std::string> attributes,
               std::vector<std::string> conditions,
               const std::vector<std::array<std::string, 3>>& triples);

    int size(int axis) const { return static_cast<int>(labels_[axis].size()); }
    SmallSet full(int axis) const { return SmallSet::full(size(axis)); }
    const std::vector<std::string>& labels(int axis) const { return labels_[axis]; }
    const std::string& label(int axis, int i) const { return labels_[axis][i]; }

    bool has(int g, int m, int b) const {
        return fiber3_[g * size(1) + m].contains(b);
    }
    long long incidence_size() const { return incidence_count_; }
    std::vector<std::array<int, 3>> incidence_triples() const;

    /// Index of a label on an axis, or error.
    int index_of(int axis, const std::string& label) const;
    std::optional<int> find(int axis, const std::string& label) const;

    /// Mask over `axis` of the entities related to the fixed pair of
    /// entities on the other two axes (given in ascending axis order).
    SmallSet fiber(int axis, int p, int q) const;

private:
    std::array<std::vector<std::string>, 3> labels_;
    std::array<std::unordered_map<std::string, int>, 3> index_;
    // fiberA[p * nQ + q] = mask over axis A of entities related to (p, q),
    // where (P, Q) are the other two axes in ascending order.
    std::vector<SmallSet> fiber1_, fiber2_, fiber3_;
    long long incidence_count_ = 0;
};

/// The two non-`axis` axes in ascending order.
constexpr std::pair<int, int> other_axes(int axis) {
    return axis == 0 ? std::pair{1, 2} : axis == 1 ? std::pair{0, 2}
                                                   : std::pair{0, 1};
}

/// {e on axis | e is related to every pair in `pairs`}. Pairs are index
/// pairs over the other two axes in ascending axis order. An empty pair set
/// yields the full axis (vacuous universal quantification).
SmallSet derive(const TriContext& k, int axis,
                const std::vector<std::pair<int, int>>& pairs);

/// All pairs over the other two axes related to every element of `subset`.
/// An empty subset yields the full pair grid.
std::vector<std::pair<int, int>> derive_pair(const TriContext& k, int axis,
                                             SmallSet subset);

/// {e on axis | e is related to (p, q) for every p, q in the two non-axis
/// components of `comps`}. The `axis` component of `comps` is ignored.
SmallSet derive_product(const TriContext& k, int axis,
                        const std::array<SmallSet, 3>& comps);

/// X x Y x Z inside the incidence? True whenever a component is empty.
bool is_triset(const TriContext& k, const Triset& t);

/// Throws InputError unless `t` is a triset of `k`.
void require_triset(const TriContext& k, const Triset& t, const char* where);

/// Product preorder: the triple product of `a` is contained in the product
/// of `b`. Not antisymmetric: all empty-product trisets are equivalent.
bool triset_leq(const Triset& a, const Triset& b);

/// The three derivation conditions of a triadic concept, checked directly.
bool is_triconcept(const TriContext& k, const Triset& t);

/// Canonical order: lexicographic by (x, y, z) as ascending index sequences.
bool canonical_less(const Triset& a, const Triset& b);

/// Search order used by the witness finders: ascending product cardinality,
/// ties broken canonically.
bool search_less(const Triset& a, const Triset& b);

/// Every triple (X, Y, Z) with X x Y x Z inside the incidence, in search
/// order. Throws ResourceError above the cap.
std::vector<Triset> enumerate_trisets(const TriContext& k, const SizeCap& cap = {});

void require_within_cap(const TriContext& k, const SizeCap& cap, const char* where);

} // namespace triclique
