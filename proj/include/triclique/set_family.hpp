#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "triclique/errors.hpp"
#include "triclique/small_set.hpp"

namespace triclique {

/// An explicitly enumerated family of subsets over a small opaque ground
/// set. The decidable property checkers below operate on these only;
/// implicit families must be materialized first.
struct ExplicitFamily {
    std::vector<std::string> ground; // element labels, declaration order
    std::vector<SmallSet> members;   // sorted by lex order, no duplicates

    int ground_size() const { return static_cast<int>(ground.size()); }
    bool contains(SmallSet s) const;
    void insert(SmallSet s);
    void normalize(); // sort + dedupe
};

/// Every non-empty member has a one-element-removed member.
bool is_accessible(const ExplicitFamily& f);

/// Downward closure: subsets of members are members.
bool is_independence_system(const ExplicitFamily& f);

/// Confluence readings. The corrected reading quantifies over non-empty
/// common subsets I; the printed reading's membership test "empty set is an
/// element of I" never holds for a set of opaque elements, so that variant
/// is vacuously true on every family.
enum class ConfluenceReading { nonempty_common, printed };

/// For all members I, X, Y with I <= X and I <= Y (I non-empty under the
/// corrected reading): X | Y is a member.
bool is_confluent(const ExplicitFamily& f,
                  ConfluenceReading reading = ConfluenceReading::nonempty_common);

/// Accessible, and every strict member pair X < Y admits a one-element
/// augmentation step inside the family toward Y.
bool is_strongly_accessible(const ExplicitFamily& f);

/// The ground set is a member and members are closed under intersection.
bool is_closure_system(const ExplicitFamily& f);

/// Membership view of a (possibly implicit) set family over a small ground.
struct FamilyView {
    int ground_size = 0;
    std::function<bool(SmallSet)> contains;
};

FamilyView view_of(const ExplicitFamily& f);

/// Lists every fixpoint of `closure` in the family, with no duplicates, by
/// breadth-first augmentation from the empty set. Requires the empty set to
/// be a member and the family to be accessible (every member then has an
/// insertion chain inside the family); strong accessibility is the caller's
/// responsibility and can be verified with the checkers above. Throws
/// ContractError if `closure` maps a member outside the family.
std::vector<SmallSet> list_closed_sets(
    const FamilyView& family, const std::function<SmallSet(SmallSet)>& closure);

} // namespace triclique
