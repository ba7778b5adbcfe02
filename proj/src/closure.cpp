#include "triclique/closure.hpp"

#include <algorithm>

#include "triclique/enumerate.hpp"

namespace triclique {

const std::vector<AxisOrdering>& all_orderings() {
    static const std::vector<AxisOrdering> orderings = {
        {{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}},
        {{1, 2, 0}}, {{2, 0, 1}}, {{2, 1, 0}},
    };
    return orderings;
}

namespace {

Triconcept cascade(const TriContext& k, const AxisOrdering& ord, const Triset& s) {
    std::array<SmallSet, 3> comps = s.comps();
    for (int a : ord.order) comps[a] = derive_product(k, a, comps);
    return {comps[0], comps[1], comps[2]};
}

} // namespace

Triconcept h_close(const TriContext& k, const Triset& s) {
    require_triset(k, s, "h_close");
    return cascade(k, {{0, 1, 2}}, s);
}

Triconcept sigma_close(const TriContext& k, const AxisOrdering& ord, const Triset& s) {
    require_triset(k, s, "sigma_close");
    return cascade(k, ord, s);
}

namespace {

/// Candidate lowers for the witness searches: switching generators first
/// (by product size, then canonically), then the remaining
/// non-empty-product trisets in search order.
std::vector<Triset> search_candidates(const TriContext& k,
                                      const WeededSystem& weeded,
                                      const SizeCap& cap) {
    std::vector<Triset> firsts = weeded.removed_generators();
    std::sort(firsts.begin(), firsts.end(), search_less);
    std::vector<Triset> rest;
    for (const auto& t : enumerate_trisets(k, cap)) {
        if (t.product_empty()) continue;
        if (std::find(firsts.begin(), firsts.end(), t) != firsts.end()) continue;
        rest.push_back(t);
    }
    firsts.insert(firsts.end(), rest.begin(), rest.end());
    return firsts;
}

} // namespace

std::optional<MonotonicityWitness> find_monotonicity_witness(
    const TriContext& k, const AxisOrdering& ord, TrisetDomain domain,
    const SizeCap& cap) {
    WeededSystem weeded = weeded_system(k, cap);
    auto in_domain = [&](const Triset& t) {
        return domain == TrisetDomain::full || weeded.monotone_domain_contains(t);
    };

    std::vector<Triset> lowers = search_candidates(k, weeded, cap);
    // Upper candidates: triconcepts first (closures land there), then the
    // remaining trisets.
    std::vector<Triset> uppers = weeded.concepts();
    std::sort(uppers.begin(), uppers.end(), canonical_less);
    for (const auto& t : enumerate_trisets(k, cap))
        if (!is_triconcept(k, t)) uppers.push_back(t);

    for (const auto& lo : lowers) {
        if (!in_domain(lo)) continue;
        Triconcept closed_lo = cascade(k, ord, lo);
        for (const auto& hi : uppers) {
            if (!in_domain(hi)) continue;
            if (!triset_leq(lo, hi)) continue;
            Triconcept closed_hi = cascade(k, ord, hi);
            if (!triset_leq(closed_lo, closed_hi))
                return MonotonicityWitness{lo, hi, closed_lo, closed_hi};
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Triconcept, Triconcept>> same_extent_antiordinal_pairs(
    const TriContext& k, const SizeCap& cap) {
    auto concepts = brute_force_triconcepts(k, cap);
    std::vector<std::pair<Triconcept, Triconcept>> out;
    for (const auto& c1 : concepts)
        for (const auto& c2 : concepts) {
            if (c1 == c2 || !(c1.x == c2.x)) continue;
            if (!c1.y.proper_subset_of(c2.y)) continue;
            if (!c2.z.proper_subset_of(c1.z)) continue;
            // The induced lower triset (X, Y1, Z2) must have a non-empty
            // product to force a violation in the product preorder.
            if (c1.x.empty() || c1.y.empty() || c2.z.empty()) continue;
            out.emplace_back(c1, c2);
        }
    return out;
}

std::vector<NoClosureWitness> no_global_closure_witnesses(const TriContext& k,
                                                          const SizeCap& cap) {
    auto concepts = brute_force_triconcepts(k, cap);
    std::vector<NoClosureWitness> out;
    for (size_t i = 0; i < concepts.size(); ++i)
        for (size_t j = i + 1; j < concepts.size(); ++j) {
            Triset s = tuple_of(flat(concepts[i]) & flat(concepts[j]));
            if (s.product_empty()) continue;
            out.push_back({concepts[i], concepts[j], s});
        }
    return out;
}

std::optional<NoClosureWitness> no_global_closure_condition(const TriContext& k,
                                                            const SizeCap& cap) {
    auto all = no_global_closure_witnesses(k, cap);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<NonCommutativityWitness> check_non_commutativity(
    const TriContext& k, const SizeCap& cap) {
    WeededSystem weeded = weeded_system(k, cap);
    const auto& orderings = all_orderings();
    for (const auto& s : search_candidates(k, weeded, cap)) {
        std::array<Triconcept, 6> closed;
        for (size_t i = 0; i < orderings.size(); ++i)
            closed[i] = cascade(k, orderings[i], s);
        for (size_t i = 0; i < orderings.size(); ++i)
            for (size_t j = i + 1; j < orderings.size(); ++j)
                if (!(closed[i] == closed[j]))
                    return NonCommutativityWitness{orderings[i], orderings[j], s};
    }
    return std::nullopt;
}

} // namespace triclique
