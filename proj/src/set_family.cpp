#include "triclique/set_family.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace triclique {

bool ExplicitFamily::contains(SmallSet s) const {
    return std::binary_search(members.begin(), members.end(), s, lex_less);
}

void ExplicitFamily::insert(SmallSet s) {
    auto it = std::lower_bound(members.begin(), members.end(), s, lex_less);
    if (it == members.end() || !(*it == s)) members.insert(it, s);
}

void ExplicitFamily::normalize() {
    std::sort(members.begin(), members.end(), lex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool is_accessible(const ExplicitFamily& f) {
    for (SmallSet m : f.members) {
        if (m.empty()) continue;
        bool ok = false;
        for (int e : m)
            if (f.contains(m.without(e))) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

bool is_independence_system(const ExplicitFamily& f) {
    for (SmallSet m : f.members) {
        // Checking one-element removals suffices: downward closure fails
        // first at some immediate subset along any descending chain.
        for (int e : m)
            if (!f.contains(m.without(e))) return false;
    }
    return true;
}

bool is_confluent(const ExplicitFamily& f, ConfluenceReading reading) {
    if (reading == ConfluenceReading::printed) return true;
    for (SmallSet i : f.members) {
        if (i.empty()) continue;
        for (SmallSet x : f.members) {
            if (!i.subset_of(x)) continue;
            for (SmallSet y : f.members) {
                if (!i.subset_of(y)) continue;
                if (!f.contains(x | y)) return false;
            }
        }
    }
    return true;
}

bool is_strongly_accessible(const ExplicitFamily& f) {
    if (!is_accessible(f)) return false;
    for (SmallSet x : f.members)
        for (SmallSet y : f.members) {
            if (!x.proper_subset_of(y)) continue;
            bool ok = false;
            for (int e : y - x)
                if (f.contains(x.with(e))) { ok = true; break; }
            if (!ok) return false;
        }
    return true;
}

bool is_closure_system(const ExplicitFamily& f) {
    if (!f.contains(SmallSet::full(f.ground_size()))) return false;
    for (SmallSet x : f.members)
        for (SmallSet y : f.members)
            if (!f.contains(x & y)) return false;
    return true;
}

FamilyView view_of(const ExplicitFamily& f) {
    return {f.ground_size(), [&f](SmallSet s) { return f.contains(s); }};
}

std::vector<SmallSet> list_closed_sets(
    const FamilyView& family, const std::function<SmallSet(SmallSet)>& closure) {
    if (family.ground_size > SmallSet::kMaxGround)
        throw ResourceError("list_closed_sets: ground set exceeds 64 elements");
    if (!family.contains(SmallSet{}))
        throw ContractError("list_closed_sets: the empty set must be a member");

    std::unordered_set<std::uint64_t> seen;
    std::deque<SmallSet> queue;
    std::vector<SmallSet> fixpoints;
    seen.insert(0);
    queue.push_back(SmallSet{});
    while (!queue.empty()) {
        SmallSet cur = queue.front();
        queue.pop_front();
        SmallSet closed = closure(cur);
        if (!family.contains(closed))
            throw ContractError("list_closed_sets: closure left the family");
        if (closed == cur) fixpoints.push_back(cur);
        for (int e = 0; e < family.ground_size; ++e) {
            if (cur.contains(e)) continue;
            SmallSet next = cur.with(e);
            if (seen.count(next.bits)) continue;
            if (!family.contains(next)) continue;
            seen.insert(next.bits);
            queue.push_back(next);
        }
    }
    std::sort(fixpoints.begin(), fixpoints.end(), lex_less);
    return fixpoints;
}

} // namespace triclique
