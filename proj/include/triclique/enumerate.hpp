#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triclique/context.hpp"
#include "triclique/set_family.hpp"

namespace triclique {

/// All triconcepts by exhaustive maximality filtering. Independent of the
/// closure operators: candidates are built from subset pairs on the first
/// two axes with a maximal third component, then filtered for
/// component-wise maximality.
std::vector<Triconcept> brute_force_triconcepts(const TriContext& k,
                                                const SizeCap& cap = {});

/// All triconcepts as the image of the concept-forming closure over the
/// triset system. Must equal brute_force_triconcepts exactly.
std::vector<Triconcept> fixpoint_triconcepts(const TriContext& k,
                                             const SizeCap& cap = {});

/// A triset obtained as tuple(flat(c1) & flat(c2)) for distinct triconcepts
/// c1, c2, with all witnessing pairs. Only generators with a non-empty
/// product are enumerated; the empty-product intersections all collapse
/// into the one equivalence class of the product preorder and are tracked
/// separately for counting.
struct SwitchingGenerator {
    Triset triset;
    std::vector<std::pair<Triconcept, Triconcept>> witnesses;
};

struct SwitchingCensus {
    std::vector<SwitchingGenerator> generators;   // non-empty products, sorted
    std::vector<Triset> empty_product_tuples;     // distinct component triples
};

SwitchingCensus switching_generator_census(const TriContext& k,
                                           const SizeCap& cap = {});

std::vector<SwitchingGenerator> switching_generators(const TriContext& k,
                                                     const SizeCap& cap = {});

enum class CountConvention { product, componentwise };

/// Product convention: distinct non-empty products, plus one for the
/// empty-product class when it is realized. Componentwise convention:
/// distinct component triples with a non-empty flat.
std::uint64_t count_switching_generators(const TriContext& k,
                                         CountConvention convention,
                                         const SizeCap& cap = {});

/// The combinatorial triple sum over split sizes (k1, k2, k3) with at least
/// one ground element left unused; arithmetically equal to 4^n - 3^n.
std::uint64_t switching_generator_triple_sum(int n);
std::uint64_t switching_generator_closed_form(int n);

/// The triset system with switching generators removed. Two membership
/// predicates are exposed. `contains` removes exactly the pairwise flat
/// intersections (the maximal generators); this is the family whose flat
/// sets feed the set-system checkers and the closed-set listing.
/// `monotone_domain_contains` removes every triset lying below two or more
/// distinct triconcepts (all switching generators, maximal or not); this is
/// the domain on which the cascade closures are monotone.
class WeededSystem {
public:
    WeededSystem(const TriContext& k, const SizeCap& cap);

    const TriContext& context() const { return *ctx_; }
    const std::vector<Triconcept>& concepts() const { return concepts_; }
    const std::vector<Triset>& removed_generators() const { return removed_; }

    bool contains(const Triset& t) const;
    int container_count(const Triset& t) const;
    bool monotone_domain_contains(const Triset& t) const;

    /// Flat-set family of the literal membership over the combined ground
    /// set. The empty set is a member of the literal family; pass
    /// include_empty = false for the variant that treats it as the
    /// universal switching generator.
    ExplicitFamily flat_family(bool include_empty = true) const;

private:
    const TriContext* ctx_;
    SizeCap cap_;
    std::vector<Triconcept> concepts_;
    std::vector<Triset> removed_; // componentwise-distinct flat intersections
};

WeededSystem weeded_system(const TriContext& k, const SizeCap& cap = {});

/// Power tricontext on {1..n}: all triples except those the reading forbids.
enum class PowerReading { not_all_equal, pairwise_distinct };
TriContext power_context(int n, PowerReading reading = PowerReading::not_all_equal);

/// Diagonal tricontext on {1..m}: incidence {(a, a, a)}.
TriContext diagonal_context(int m);

} // namespace triclique
