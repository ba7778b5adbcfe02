#pragma once

#include <cstdint>

#include "triclique/context.hpp"
#include "triclique/mrd.hpp"

namespace triclique {

/// Deterministic fixture generators for the randomized suites. Same seed,
/// same result, independent of the standard library's distributions.
TriContext random_context(std::uint64_t seed, int max_per_axis,
                          bool fixed_size = false);

Mrd random_mrd(std::uint64_t seed, int max_entities);

} // namespace triclique
