#include "triclique/context.hpp"

#include <algorithm>

namespace triclique {

TriContext::TriContext(std::vector<std::string> objects,
                       std::vector<std::string> attributes,
                       std::vector<std::string> conditions,
                       const std::vector<std::array<std::string, 3>>& triples)
    : labels_{std::move(objects), std::move(attributes), std::move(conditions)} {
    for (int a = 0; a < 3; ++a) {
        if (labels_[a].size() > SmallSet::kMaxGround)
            throw InputError("axis '" + std::string(role_name(Role(a))) +
                             "' exceeds the implementation limit of 64 entities");
        for (int i = 0; i < static_cast<int>(labels_[a].size()); ++i) {
            const auto& name = labels_[a][i];
            if (name.empty())
                throw InputError("empty entity label");
            if (!index_[a].emplace(name, i).second)
                throw InputError("duplicate " + std::string(role_name(Role(a))) +
                                 " label '" + name + "'");
        }
    }
    const int ng = size(0), nm = size(1), nb = size(2);
    fiber1_.assign(static_cast<size_t>(nm) * nb, {});
    fiber2_.assign(static_cast<size_t>(ng) * nb, {});
    fiber3_.assign(static_cast<size_t>(ng) * nm, {});
    for (const auto& t : triples) {
        int g = index_of(0, t[0]), m = index_of(1, t[1]), b = index_of(2, t[2]);
        if (has(g, m, b)) continue;
        fiber1_[m * nb + b] = fiber1_[m * nb + b].with(g);
        fiber2_[g * nb + b] = fiber2_[g * nb + b].with(m);
        fiber3_[g * nm + m] = fiber3_[g * nm + m].with(b);
        ++incidence_count_;
    }
}

std::vector<std::array<int, 3>> TriContext::incidence_triples() const {
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<size_t>(incidence_count_));
    for (int g = 0; g < size(0); ++g)
        for (int m = 0; m < size(1); ++m)
            for (int b : fiber3_[g * size(1) + m])
                out.push_back({g, m, b});
    return out;
}

int TriContext::index_of(int axis, const std::string& label) const {
    auto it = index_[axis].find(label);
    if (it == index_[axis].end())
        throw InputError("unknown " + std::string(role_name(Role(axis))) +
                         " '" + label + "'");
    return it->second;
}

std::optional<int> TriContext::find(int axis, const std::string& label) const {
    auto it = index_[axis].find(label);
    if (it == index_[axis].end()) return std::nullopt;
    return it->second;
}

SmallSet TriContext::fiber(int axis, int p, int q) const {
    switch (axis) {
        case 0: return fiber1_[p * size(2) + q];
        case 1: return fiber2_[p * size(2) + q];
        default: return fiber3_[p * size(1) + q];
    }
}

SmallSet derive(const TriContext& k, int axis,
                const std::vector<std::pair<int, int>>& pairs) {
    auto [p, q] = other_axes(axis);
    SmallSet acc = k.full(axis);
    for (auto [ip, iq] : pairs) {
        if (ip < 0 || ip >= k.size(p) || iq < 0 || iq >= k.size(q))
            throw InputError("derive: pair references an undeclared entity");
        acc = acc & k.fiber(axis, ip, iq);
    }
    return acc;
}

std::vector<std::pair<int, int>> derive_pair(const TriContext& k, int axis,
                                             SmallSet subset) {
    if (!subset.subset_of(k.full(axis)))
        throw InputError("derive_pair: subset references an undeclared entity");
    auto [p, q] = other_axes(axis);
    std::vector<std::pair<int, int>> out;
    for (int ip = 0; ip < k.size(p); ++ip)
        for (int iq = 0; iq < k.size(q); ++iq)
            if (subset.subset_of(k.fiber(axis, ip, iq)))
                out.emplace_back(ip, iq);
    return out;
}

SmallSet derive_product(const TriContext& k, int axis,
                        const std::array<SmallSet, 3>& comps) {
    auto [p, q] = other_axes(axis);
    SmallSet acc = k.full(axis);
    for (int ip : comps[p])
        for (int iq : comps[q]) {
            acc = acc & k.fiber(axis, ip, iq);
            if (acc.empty()) return acc;
        }
    return acc;
}

bool is_triset(const TriContext& k, const Triset& t) {
    if (!t.x.subset_of(k.full(0)) || !t.y.subset_of(k.full(1)) ||
        !t.z.subset_of(k.full(2)))
        throw InputError("triset references an undeclared entity");
    return t.x.subset_of(derive_product(k, 0, t.comps()));
}

void require_triset(const TriContext& k, const Triset& t, const char* where) {
    if (!is_triset(k, t))
        throw InputError(std::string(where) + ": argument is not a triset");
}

bool triset_leq(const Triset& a, const Triset& b) {
    if (a.product_empty()) return true;
    return a.componentwise_subset_of(b);
}

bool is_triconcept(const TriContext& k, const Triset& t) {
    if (!is_triset(k, t)) return false;
    return derive_product(k, 0, t.comps()) == t.x &&
           derive_product(k, 1, t.comps()) == t.y &&
           derive_product(k, 2, t.comps()) == t.z;
}

bool canonical_less(const Triset& a, const Triset& b) {
    if (int c = lex_compare(a.x, b.x)) return c < 0;
    if (int c = lex_compare(a.y, b.y)) return c < 0;
    return lex_compare(a.z, b.z) < 0;
}

bool search_less(const Triset& a, const Triset& b) {
    auto pa = a.product_size(), pb = b.product_size();
    if (pa != pb) return pa < pb;
    return canonical_less(a, b);
}

void require_within_cap(const TriContext& k, const SizeCap& cap, const char* where) {
    for (int a = 0; a < 3; ++a)
        if (k.size(a) > cap.per_axis)
            throw ResourceError(std::string(where) + ": axis size " +
                                std::to_string(k.size(a)) +
                                " exceeds the exhaustive-search cap of " +
                                std::to_string(cap.per_axis) +
                                " entities per axis");
}

std::vector<Triset> enumerate_trisets(const TriContext& k, const SizeCap& cap) {
    require_within_cap(k, cap, "enumerate_trisets");
    std::vector<Triset> out;
    const std::uint64_t ny = 1ull << k.size(1), nz = 1ull << k.size(2);
    const std::uint64_t nx = 1ull << k.size(0);
    for (std::uint64_t ybits = 0; ybits < ny; ++ybits)
        for (std::uint64_t zbits = 0; zbits < nz; ++zbits) {
            SmallSet y{ybits}, z{zbits};
            SmallSet bound = derive_product(k, 0, {SmallSet{}, y, z});
            for (std::uint64_t xbits = 0; xbits < nx; ++xbits) {
                SmallSet x{xbits};
                if (x.subset_of(bound)) out.push_back({x, y, z});
            }
        }
    std::sort(out.begin(), out.end(), search_less);
    return out;
}

} // namespace triclique
