#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triclique/context.hpp"

namespace triclique {

/// One of the 3! = 6 cascade orders for the derivation-based closures.
struct AxisOrdering {
    std::array<int, 3> order; // permutation of {0, 1, 2}

    std::string name() const {
        return "sigma_" + std::to_string(order[0] + 1) +
               std::to_string(order[1] + 1) + std::to_string(order[2] + 1);
    }
    friend bool operator==(const AxisOrdering&, const AxisOrdering&) = default;
};

/// All six orderings, lexicographic by permutation.
const std::vector<AxisOrdering>& all_orderings();

/// The concept-forming closure: cascades the three derivations in axis
/// order 1, 2, 3. Extensive and idempotent with respect to the product
/// preorder; the result is always a triconcept. Not monotone on the full
/// triset system.
Triconcept h_close(const TriContext& k, const Triset& s);

/// Cascade in the order given by `ord`; sigma_123 coincides with h_close.
Triconcept sigma_close(const TriContext& k, const AxisOrdering& ord, const Triset& s);

enum class TrisetDomain { full, weeded };

/// A comparable pair of trisets whose closures are not comparable.
struct MonotonicityWitness {
    Triset lower, upper;
    Triconcept closed_lower, closed_upper;
};

/// Exhaustively searches comparable triset pairs with a non-empty-product
/// lower member (the empty-product trisets form one preorder class whose
/// closure is representative-dependent, so they carry no monotonicity
/// information). The weeded domain keeps only trisets lying below at most
/// one triconcept. Candidate lowers are tried switching generators first so
/// the reported witness is the canonical counterexample of the context.
std::optional<MonotonicityWitness> find_monotonicity_witness(
    const TriContext& k, const AxisOrdering& ord, TrisetDomain domain,
    const SizeCap& cap = {});

/// All pairs of distinct triconcepts sharing an extent, with strictly
/// nested intents, reverse-nested modi, and a non-empty induced product
/// (X, Y1, Z2). Each such pair forces a monotonicity violation on the full
/// system.
std::vector<std::pair<Triconcept, Triconcept>> same_extent_antiordinal_pairs(
    const TriContext& k, const SizeCap& cap = {});

struct NoClosureWitness {
    Triconcept c1, c2;
    Triset shared; // tuple(flat(c1) & flat(c2)), non-empty product
};

/// First pair of distinct triconcepts whose flat intersection has a
/// non-empty product, with that intersection; nullopt if none exists.
/// Such a pair rules out any closure operator on the full triset system.
std::optional<NoClosureWitness> no_global_closure_condition(
    const TriContext& k, const SizeCap& cap = {});

/// Every qualifying pair, canonically ordered.
std::vector<NoClosureWitness> no_global_closure_witnesses(
    const TriContext& k, const SizeCap& cap = {});

struct NonCommutativityWitness {
    AxisOrdering first, second;
    Triset input;
};

/// Searches for a triset and two cascade orders that disagree. Closure
/// outputs are triconcepts and every triconcept is fixed by every ordering,
/// so composition differences reduce to single-application differences.
std::optional<NonCommutativityWitness> check_non_commutativity(
    const TriContext& k, const SizeCap& cap = {});

} // namespace triclique
