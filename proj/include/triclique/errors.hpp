#pragma once

#include <stdexcept>
#include <string>

namespace triclique {

/// Bad caller input: unknown entities, malformed files, violated preconditions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive operation was requested above the configured size cap.
/// We never silently sample; the caller must raise the cap explicitly.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A supplied closure or family violated its stated contract mid-run.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Caps for the exhaustive searches. `per_axis` bounds tricontext axes,
/// `mrd_entities` bounds multi-relational ground sets.
struct SizeCap {
    int per_axis = 5;
    int mrd_entities = 18;
};

} // namespace triclique
