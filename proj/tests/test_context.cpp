#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "triclique/context.hpp"
#include "triclique/enumerate.hpp"
#include "triclique/random_gen.hpp"

using namespace triclique;
using namespace fixtures;

namespace {

// Independent oracle for the derivation operators: a direct scan of the
// incidence triples.
SmallSet derive_by_scan(const TriContext& k, int axis,
                        const std::vector<std::pair<int, int>>& pairs) {
    auto [p, q] = other_axes(axis);
    SmallSet out;
    for (int e = 0; e < k.size(axis); ++e) {
        bool all = true;
        for (auto [ip, iq] : pairs) {
            int idx[3];
            idx[axis] = e;
            idx[p] = ip;
            idx[q] = iq;
            if (!k.has(idx[0], idx[1], idx[2])) { all = false; break; }
        }
        if (all) out = out.with(e);
    }
    return out;
}

std::vector<std::pair<int, int>> all_pairs(const TriContext& k, int axis) {
    auto [p, q] = other_axes(axis);
    std::vector<std::pair<int, int>> out;
    for (int ip = 0; ip < k.size(p); ++ip)
        for (int iq = 0; iq < k.size(q); ++iq) out.emplace_back(ip, iq);
    return out;
}

} // namespace

TEST_CASE("derive on k1") {
    auto k = k1();
    // axis 1 (objects), single pair (t1, r1)
    std::vector<std::pair<int, int>> p = {{k.index_of(1, "t1"), k.index_of(2, "r1")}};
    CHECK(derive(k, 0, p) == objs(k, {"u1", "u2"}));
    CHECK(derive(k, 0, p) == derive_by_scan(k, 0, p));

    // vacuous quantification
    CHECK(derive(k, 1, {}) == k.full(1));

    // all attribute x condition pairs: no object is related to (t3, r1)
    CHECK(derive(k, 0, all_pairs(k, 0)) == SmallSet{});
    CHECK(derive_by_scan(k, 0, all_pairs(k, 0)) == SmallSet{});

    CHECK_THROWS_AS(derive(k, 0, {{5, 0}}), InputError);
}

TEST_CASE("derive_pair on k1") {
    auto k = k1();
    auto pairs_r2 = derive_pair(k, 2, conds(k, {"r2"}));
    std::vector<std::pair<int, int>> expect = {
        {k.index_of(0, "u1"), k.index_of(1, "t1")},
        {k.index_of(0, "u2"), k.index_of(1, "t1")}};
    std::sort(expect.begin(), expect.end());
    CHECK(pairs_r2 == expect);

    CHECK(derive_pair(k, 2, {}).size() == 9); // full object x attribute grid

    auto pairs_u12 = derive_pair(k, 0, objs(k, {"u1", "u2"}));
    std::vector<std::pair<int, int>> expect2 = {
        {k.index_of(1, "t1"), k.index_of(2, "r1")},
        {k.index_of(1, "t1"), k.index_of(2, "r2")},
        {k.index_of(1, "t2"), k.index_of(2, "r1")}};
    std::sort(expect2.begin(), expect2.end());
    CHECK(pairs_u12 == expect2);

    CHECK_THROWS_AS(derive_pair(k, 0, SmallSet::full(5)), InputError);
}

TEST_CASE("is_triset on k1") {
    auto k = k1();
    CHECK(is_triset(k, triple(k, {"u1", "u2"}, {"t1"}, {"r1", "r2"})));
    CHECK(is_triset(k, triple(k, {"u1", "u2", "u3"}, {"t1"}, {})));
    CHECK_FALSE(is_triset(k, triple(k, {"u1", "u2"}, {"t1", "t2"}, {"r1", "r2"})));
}

TEST_CASE("flat and tuple") {
    auto k = k1();
    Triset t = triple(k, {"u1", "u2"}, {"t1"}, {"r1"});
    FlatSet f = flat(t);
    CHECK(f.size() == 4);
    CHECK(tuple_of(f) == t);

    CHECK(flat(Triset{}).empty());
    CHECK(tuple_of(FlatSet{}) == Triset{});

    // Role tags keep colliding labels apart.
    TriContext kc({"a"}, {"a"}, {"b"}, {{"a", "a", "b"}});
    Triset tc = {objs(kc, {"a"}), atts(kc, {"a"}), SmallSet{}};
    CHECK(flat(tc).size() == 2);

    // The mixed set {u, t0, t, r} over the k3 ground splits by role.
    auto k3x = k3();
    FlatSet mixed{objs(k3x, {"u"}), atts(k3x, {"t0", "t"}), conds(k3x, {"r"})};
    Triset split = tuple_of(mixed);
    CHECK(split.x == objs(k3x, {"u"}));
    CHECK(split.y == atts(k3x, {"t", "t0"}));
    CHECK(split.z == conds(k3x, {"r"}));
}

TEST_CASE("flat/tuple round trips") {
    auto k = random_context(11, 4);
    for (const auto& t : enumerate_trisets(k)) CHECK(tuple_of(flat(t)) == t);
}

TEST_CASE("triset_leq") {
    auto k = k1();
    CHECK(triset_leq(triple(k, {"u1", "u2"}, {"t1"}, {"r1"}),
                     triple(k, {"u1", "u2"}, {"t1"}, {"r1", "r2"})));
    // both products empty
    CHECK(triset_leq(triple(k, {"u1"}, {"t1"}, {}), triple(k, {}, {"t2"}, {"r1"})));
    CHECK_FALSE(triset_leq(triple(k, {"u1", "u2"}, {"t1", "t2"}, {"r1"}),
                           triple(k, {"u1", "u2"}, {"t1"}, {"r1", "r2"})));
}

TEST_CASE("product preorder properties") {
    auto k = k1();
    auto trisets = enumerate_trisets(k);
    for (const auto& a : trisets) {
        CHECK(triset_leq(a, a));
        if (a.product_empty())
            for (const auto& b : trisets)
                if (b.product_empty()) CHECK(triset_leq(a, b));
    }
    // transitivity on a sample
    for (size_t i = 0; i < trisets.size(); i += 7)
        for (size_t j = 0; j < trisets.size(); j += 11)
            for (size_t l = 0; l < trisets.size(); l += 13)
                if (triset_leq(trisets[i], trisets[j]) &&
                    triset_leq(trisets[j], trisets[l]))
                    CHECK(triset_leq(trisets[i], trisets[l]));
}

TEST_CASE("derivation is antitone and Galois") {
    auto k = k1();
    for (int axis = 0; axis < 3; ++axis) {
        SmallSet a = SmallSet{0x1}, b = SmallSet{0x3}; // a subset of b
        auto pa = derive_pair(k, axis, a);
        auto pb = derive_pair(k, axis, b);
        for (auto p : pb)
            CHECK(std::find(pa.begin(), pa.end(), p) != pa.end());

        // dually for derive: a larger pair set derives a smaller axis set
        auto grid = derive_pair(k, axis, SmallSet{});
        for (size_t cut = 0; cut <= grid.size(); cut += 2) {
            std::vector<std::pair<int, int>> w(grid.begin(), grid.begin() + cut);
            CHECK(derive(k, axis, grid).subset_of(derive(k, axis, w)));
        }

        // Galois: W inside Z' iff Z inside W'
        for (std::uint64_t zbits = 0; zbits < (1u << k.size(axis)); zbits += 3) {
            SmallSet z{zbits};
            auto zp = derive_pair(k, axis, z);
            std::vector<std::pair<int, int>> w(zp.begin(),
                                               zp.begin() + zp.size() / 2);
            CHECK(z.subset_of(derive(k, axis, w)) ==
                  std::includes(zp.begin(), zp.end(), w.begin(), w.end()));
        }
    }
}

TEST_CASE("triconcept characterizations agree") {
    // Maximal triples and the three-derivation-conditions definition select
    // the same triples.
    std::vector<TriContext> cases = {k1(), k3(), random_context(3, 4),
                                     random_context(4, 4), random_context(5, 3)};
    for (const auto& k : cases) {
        auto concepts = brute_force_triconcepts(k);
        for (const auto& t : enumerate_trisets(k)) {
            bool by_def = is_triconcept(k, t);
            bool by_max =
                std::find(concepts.begin(), concepts.end(), t) != concepts.end();
            CHECK(by_def == by_max);
        }
    }
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(TriContext({"a", "a"}, {"b"}, {"c"}, {}), InputError);
    CHECK_THROWS_AS(TriContext({"a"}, {"b"}, {"c"}, {{"x", "b", "c"}}),
                    InputError);
    // isolated entities are preserved
    TriContext k({"a", "iso"}, {"b"}, {"c"}, {{"a", "b", "c"}});
    CHECK(k.size(0) == 2);
    CHECK(k.incidence_size() == 1);
}
