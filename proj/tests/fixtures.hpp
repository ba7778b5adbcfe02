#pragma once

#include <string>
#include <vector>

#include "triclique/context.hpp"
#include "triclique/mrd.hpp"

namespace fixtures {

using triclique::Mrd;
using triclique::SmallSet;
using triclique::TriContext;
using triclique::Triset;

// 3 objects x 3 attributes x 2 conditions; six incidence triples. The
// smallest context on which the concept-forming closure fails to be
// monotone.
TriContext k1();

// k1 plus a third, empty condition layer (r3 is isolated).
TriContext k2();

// The lossy-encoding context: hyperedges (u,t,r0), (u,t0,r), (u0,t,r);
// encoding it produces the phantom triple (u,t,r).
TriContext k3();

// 4x4x3 context distinguishing the six cascade orders.
TriContext k4();

// Idempotency-failure graph: f bridges {r1,r2,p1} to the u-side; every u
// has an f edge, so extending by f keeps the compatible set unchanged.
Mrd ex1_left();

// Same graph minus the f--u3 edge; the compatible set shrinks when f is
// added, so the g operator never takes the first step.
Mrd ex1_right();

// Subset helpers over a context's axes, by label.
SmallSet objs(const TriContext& k, const std::vector<std::string>& labels);
SmallSet atts(const TriContext& k, const std::vector<std::string>& labels);
SmallSet conds(const TriContext& k, const std::vector<std::string>& labels);
Triset triple(const TriContext& k, const std::vector<std::string>& x,
              const std::vector<std::string>& y,
              const std::vector<std::string>& z);

// Entity subset of an mrd by qualified "type:label" names.
SmallSet entities(const Mrd& d, const std::vector<std::string>& qualified);

} // namespace fixtures
