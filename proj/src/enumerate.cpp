#include "triclique/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "triclique/closure.hpp"

namespace triclique {

std::vector<Triconcept> brute_force_triconcepts(const TriContext& k,
                                                const SizeCap& cap) {
    require_within_cap(k, cap, "brute_force_triconcepts");
    // Candidates: every (A, B) over the first two axes with the maximal
    // third component. Every triconcept appears among them, and maximality
    // within the candidate set coincides with maximality among trisets.
    std::vector<Triset> candidates;
    const std::uint64_t nx = 1ull << k.size(0), ny = 1ull << k.size(1);
    for (std::uint64_t xb = 0; xb < nx; ++xb)
        for (std::uint64_t yb = 0; yb < ny; ++yb) {
            SmallSet x{xb}, y{yb};
            SmallSet z = derive_product(k, 2, {x, y, SmallSet{}});
            Triset t{x, y, z};
            if (std::find(candidates.begin(), candidates.end(), t) ==
                candidates.end())
                candidates.push_back(t);
        }
    std::vector<Triconcept> out;
    for (const auto& t : candidates) {
        bool maximal = true;
        for (const auto& o : candidates)
            if (!(o == t) && t.componentwise_subset_of(o)) { maximal = false; break; }
        if (maximal) out.push_back(t);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Triconcept> fixpoint_triconcepts(const TriContext& k,
                                             const SizeCap& cap) {
    require_within_cap(k, cap, "fixpoint_triconcepts");
    // The first cascade step only reads the last two components, so closing
    // the trisets (0, Y, Z) covers the closure image of the whole system;
    // every such triple is a triset.
    std::vector<Triconcept> out;
    const std::uint64_t ny = 1ull << k.size(1), nz = 1ull << k.size(2);
    for (std::uint64_t yb = 0; yb < ny; ++yb)
        for (std::uint64_t zb = 0; zb < nz; ++zb) {
            Triconcept c = h_close(k, {SmallSet{}, SmallSet{yb}, SmallSet{zb}});
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

SwitchingCensus switching_generator_census(const TriContext& k,
                                           const SizeCap& cap) {
    auto concepts = brute_force_triconcepts(k, cap);
    std::map<std::array<std::uint64_t, 3>, SwitchingGenerator> nonempty;
    std::vector<Triset> empties;
    for (size_t i = 0; i < concepts.size(); ++i)
        for (size_t j = i + 1; j < concepts.size(); ++j) {
            FlatSet inter = flat(concepts[i]) & flat(concepts[j]);
            if (inter.empty()) continue; // not a generator at all
            Triset s = tuple_of(inter);
            if (s.product_empty()) {
                if (std::find(empties.begin(), empties.end(), s) == empties.end())
                    empties.push_back(s);
                continue;
            }
            auto& slot = nonempty[{s.x.bits, s.y.bits, s.z.bits}];
            slot.triset = s;
            slot.witnesses.emplace_back(concepts[i], concepts[j]);
        }
    SwitchingCensus census;
    for (auto& [key, gen] : nonempty) census.generators.push_back(std::move(gen));
    std::sort(census.generators.begin(), census.generators.end(),
              [](const SwitchingGenerator& a, const SwitchingGenerator& b) {
                  return canonical_less(a.triset, b.triset);
              });
    std::sort(empties.begin(), empties.end(), canonical_less);
    census.empty_product_tuples = std::move(empties);
    return census;
}

std::vector<SwitchingGenerator> switching_generators(const TriContext& k,
                                                     const SizeCap& cap) {
    return switching_generator_census(k, cap).generators;
}

std::uint64_t count_switching_generators(const TriContext& k,
                                         CountConvention convention,
                                         const SizeCap& cap) {
    SwitchingCensus census = switching_generator_census(k, cap);
    if (convention == CountConvention::componentwise)
        return census.generators.size() + census.empty_product_tuples.size();
    // Product equality: non-empty products are pairwise distinct already;
    // the realized empty-product class counts once.
    return census.generators.size() +
           (census.empty_product_tuples.empty() ? 0 : 1);
}

std::uint64_t switching_generator_triple_sum(int n) {
    // Binomial table up to n.
    std::vector<std::vector<std::uint64_t>> ch(n + 1,
                                               std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        ch[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            ch[i][j] = ch[i - 1][j - 1] + (j <= i - 1 ? ch[i - 1][j] : 0);
    }
    std::uint64_t sum = 0;
    for (int k1 = 0; k1 <= n - 1; ++k1)
        for (int k2 = 0; k2 <= n - k1 - 1; ++k2)
            for (int k3 = 0; k3 <= n - k1 - k2 - 1; ++k3)
                sum += ch[n][k1] * ch[n - k1][k2] * ch[n - k1 - k2][k3];
    return sum;
}

std::uint64_t switching_generator_closed_form(int n) {
    std::uint64_t p4 = 1, p3 = 1;
    for (int i = 0; i < n; ++i) { p4 *= 4; p3 *= 3; }
    return p4 - p3;
}

WeededSystem::WeededSystem(const TriContext& k, const SizeCap& cap)
    : ctx_(&k), cap_(cap), concepts_(brute_force_triconcepts(k, cap)) {
    for (const auto& g : switching_generators(k, cap))
        removed_.push_back(g.triset);
    std::sort(removed_.begin(), removed_.end(), canonical_less);
}

bool WeededSystem::contains(const Triset& t) const {
    if (!is_triset(*ctx_, t)) return false;
    return !std::binary_search(removed_.begin(), removed_.end(), t,
                               canonical_less);
}

int WeededSystem::container_count(const Triset& t) const {
    int n = 0;
    for (const auto& c : concepts_)
        if (t.componentwise_subset_of(c)) ++n;
    return n;
}

bool WeededSystem::monotone_domain_contains(const Triset& t) const {
    if (!is_triset(*ctx_, t)) return false;
    return container_count(t) <= 1;
}

ExplicitFamily WeededSystem::flat_family(bool include_empty) const {
    const TriContext& k = *ctx_;
    int total = k.size(0) + k.size(1) + k.size(2);
    if (total > SmallSet::kMaxGround)
        throw ResourceError("flat_family: combined ground set exceeds 64 elements");
    ExplicitFamily fam;
    for (int a = 0; a < 3; ++a)
        for (const auto& name : k.labels(a))
            fam.ground.push_back(std::string(role_name(Role(a))) + ":" + name);
    const int og = 0, oa = k.size(0), oc = k.size(0) + k.size(1);
    for (const auto& t : enumerate_trisets(k, cap_)) {
        if (!contains(t)) continue;
        if (!include_empty && flat(t).empty()) continue;
        SmallSet s;
        for (int g : t.x) s = s.with(og + g);
        for (int m : t.y) s = s.with(oa + m);
        for (int b : t.z) s = s.with(oc + b);
        fam.insert(s);
    }
    return fam;
}

WeededSystem weeded_system(const TriContext& k, const SizeCap& cap) {
    return WeededSystem(k, cap);
}

namespace {

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

} // namespace

TriContext power_context(int n, PowerReading reading) {
    if (n < 1) throw InputError("power_context: n must be at least 1");
    if (n > SmallSet::kMaxGround) throw InputError("power_context: n too large");
    std::vector<std::array<std::string, 3>> triples;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                bool excluded = reading == PowerReading::not_all_equal
                                    ? (a == b && b == c)
                                    : (a == b || b == c || a == c);
                if (!excluded)
                    triples.push_back({std::to_string(a), std::to_string(b),
                                       std::to_string(c)});
            }
    return TriContext(numbered_labels(n), numbered_labels(n), numbered_labels(n),
                      triples);
}

TriContext diagonal_context(int m) {
    if (m < 1) throw InputError("diagonal_context: m must be at least 1");
    if (m > SmallSet::kMaxGround) throw InputError("diagonal_context: m too large");
    std::vector<std::array<std::string, 3>> triples;
    for (int a = 1; a <= m; ++a) {
        auto s = std::to_string(a);
        triples.push_back({s, s, s});
    }
    return TriContext(numbered_labels(m), numbered_labels(m), numbered_labels(m),
                      triples);
}

} // namespace triclique
