#pragma once

#include <vector>

#include "triclique/context.hpp"

namespace triclique {

/// A small dyadic context (rows x columns) as produced by slicing a
/// tricontext along its object axis.
struct DyadicContext {
    int rows = 0, cols = 0;
    std::vector<SmallSet> row_cols; // row_cols[r] = columns related to row r

    bool has(int r, int c) const { return row_cols[r].contains(c); }
    bool empty_relation() const {
        for (const auto& s : row_cols)
            if (!s.empty()) return false;
        return true;
    }
};

struct DyadicConcept {
    SmallSet extent, intent;
    friend bool operator==(const DyadicConcept&, const DyadicConcept&) = default;
};

/// Projects the incidence of `k` onto attributes x conditions: a pair is
/// present iff some object of `objs` carries it. `objs` must be non-empty.
DyadicContext slice_context(const TriContext& k, SmallSet objs);

/// All formal concepts of the dyadic context via the derivation operators.
std::vector<DyadicConcept> dyadic_concepts(const DyadicContext& d);

/// True iff the concept lattice, ordered by extent inclusion, is a chain.
bool is_ferrers_of_concepts(const DyadicContext& d);

} // namespace triclique
