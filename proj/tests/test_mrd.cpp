#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "triclique/enumerate.hpp"
#include "triclique/mrd.hpp"
#include "triclique/random_gen.hpp"

using namespace triclique;
using namespace fixtures;

namespace {

struct Encoded {
    TriContext ctx;
    TripartiteEncoding enc;
};

Encoded encoded_k2() {
    auto ctx = k2();
    auto enc = encode_tripartite(ctx);
    return {std::move(ctx), std::move(enc)};
}

SmallSet ents(const TripartiteEncoding& enc,
              const std::vector<std::string>& qualified) {
    return entities(enc.mrd, qualified);
}

} // namespace

TEST_CASE("completeness and connectedness on encoded k2") {
    auto [ctx, enc] = encoded_k2();
    const Mrd& d = enc.mrd;
    auto x = ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                        "conditions:r1"});
    CHECK(is_complete(d, x));
    CHECK(is_connected(d, x));
    CHECK(is_ccs(d, x));

    CHECK_FALSE(is_connected(d, ents(enc, {"objects:u1", "objects:u3"})));
    for (int e = 0; e < d.entity_count(); ++e)
        CHECK(is_connected(d, SmallSet::single(e)));
    CHECK(is_connected(d, SmallSet{}));

    auto k3e = encode_tripartite(k3());
    CHECK_FALSE(is_complete(
        k3e.mrd, entities(k3e.mrd, {"objects:u", "attributes:t", "conditions:r0",
                                    "attributes:t0"})));
}

TEST_CASE("comp on encoded k2") {
    auto [ctx, enc] = encoded_k2();
    const Mrd& d = enc.mrd;
    auto x = ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                        "conditions:r1"});
    auto expect = ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                             "attributes:t2", "conditions:r1", "conditions:r2"});
    CHECK(comp(d, x) == expect);
    CHECK(comp(d, expect - ents(enc, {"conditions:r2"})) ==
          expect - ents(enc, {"conditions:r2"}));
    // singleton: every entity with the required edges
    auto u1 = ents(enc, {"objects:u1"});
    CHECK(comp(d, u1) == ents(enc, {"objects:u1", "objects:u2", "objects:u3",
                                    "attributes:t1", "attributes:t2",
                                    "conditions:r1", "conditions:r2"}));
    CHECK_THROWS_AS(comp(d, ents(enc, {"objects:u1", "objects:u3"})), InputError);
}

TEST_CASE("aug on encoded k2 and k3") {
    auto [ctx, enc] = encoded_k2();
    const Mrd& d = enc.mrd;
    auto x = ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                        "conditions:r1"});
    CHECK(aug(d, x) == ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                                  "attributes:t2", "conditions:r1",
                                  "conditions:r2"}));
    CHECK(aug(d, ents(enc, {"objects:u1"})) ==
          ents(enc, {"objects:u1", "attributes:t1", "attributes:t2",
                     "conditions:r1", "conditions:r2"}));

    // on encoded k3, every entity is a valid augmentation of {u, t}: the
    // same-type additions are vacuously complete and connect through u or t
    auto k3e = encode_tripartite(k3());
    auto ut = entities(k3e.mrd, {"objects:u", "attributes:t"});
    CHECK(aug(k3e.mrd, ut) == SmallSet::full(k3e.mrd.entity_count()));
}

TEST_CASE("g operator on encoded k2") {
    auto [ctx, enc] = encoded_k2();
    const Mrd& d = enc.mrd;
    auto x = ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                        "conditions:r1"});
    CHECK(g_close(d, x) == x);
    CHECK(g_close(d, ents(enc, {"objects:u1", "attributes:t1", "conditions:r1"})) ==
          x);
    for (SmallSet m : enumerate_mccs(d)) CHECK(g_close(d, m) == m);
}

TEST_CASE("g is extensive and monotone on non-empty CCSs") {
    std::vector<Mrd> cases = {encoded_k2().enc.mrd, encode_tripartite(k3()).mrd,
                              ex1_left(), ex1_right()};
    for (int seed = 40; seed < 46; ++seed) cases.push_back(random_mrd(seed, 7));
    for (const auto& d : cases) {
        auto fam = ccs_family(d);
        bool extensive = true, codomain = true, monotone = true;
        for (SmallSet f : fam.members) {
            SmallSet g = g_close(d, f);
            extensive = extensive && f.subset_of(g);
            if (f.empty()) continue;
            codomain = codomain && is_ccs(d, g);
            for (SmallSet f2 : fam.members)
                if (!f2.empty() && f.subset_of(f2))
                    monotone = monotone && g.subset_of(g_close(d, f2));
        }
        CHECK(extensive);
        CHECK(codomain);
        CHECK(monotone);
    }
}

TEST_CASE("g at the empty set can leave the family") {
    // Every entity is vacuously compatible with the empty set, so g(empty)
    // collects the universally compatible entities, which need not induce a
    // connected subgraph.
    Mrd right = ex1_right();
    SmallSet g0 = g_close(right, SmallSet{});
    CHECK(g0 == entities(right, {"R:r1", "R:r2", "P:p1", "U:u1", "U:u2"}));
    CHECK_FALSE(is_connected(right, g0));
}

TEST_CASE("mccs enumeration on the encoded fixtures") {
    auto k3e = encode_tripartite(k3());
    auto mccs = enumerate_mccs(k3e.mrd);
    REQUIRE(mccs.size() == 3);
    std::vector<SmallSet> expect = {
        entities(k3e.mrd, {"objects:u", "attributes:t0", "attributes:t",
                           "conditions:r"}),
        entities(k3e.mrd, {"objects:u", "objects:u0", "attributes:t",
                           "conditions:r"}),
        entities(k3e.mrd, {"objects:u", "attributes:t", "conditions:r0",
                           "conditions:r"})};
    for (SmallSet m : expect)
        CHECK(std::find(mccs.begin(), mccs.end(), m) != mccs.end());

    auto [ctx, enc] = encoded_k2();
    auto mccs2 = enumerate_mccs(enc.mrd);
    auto a = ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                        "attributes:t2", "conditions:r1"});
    auto b = ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                        "conditions:r1", "conditions:r2"});
    CHECK(std::find(mccs2.begin(), mccs2.end(), a) != mccs2.end());
    CHECK(std::find(mccs2.begin(), mccs2.end(), b) != mccs2.end());
    // isolated entities are their own maximal components
    CHECK(std::find(mccs2.begin(), mccs2.end(), ents(enc, {"objects:u3"})) !=
          mccs2.end());
}

TEST_CASE("encoding shape") {
    auto k3e = encode_tripartite(k3());
    CHECK(k3e.mrd.edge_list().size() == 9);
    CHECK(encode_tripartite(k1()).mrd.edge_list().size() == 11);
    TriContext empty({"a"}, {"b"}, {"c"}, {});
    CHECK(encode_tripartite(empty).mrd.edge_list().empty());
    CHECK(encode_tripartite(empty).mrd.entity_count() == 3);
}

TEST_CASE("phantom edges") {
    auto k = k3();
    auto ph = phantom_edges(k);
    REQUIRE(ph.size() == 1);
    CHECK(k.label(0, ph[0][0]) == "u");
    CHECK(k.label(1, ph[0][1]) == "t");
    CHECK(k.label(2, ph[0][2]) == "r");

    CHECK(phantom_edges(k1()).empty());
    CHECK(phantom_edges(diagonal_context(2)).empty());
}

TEST_CASE("mccs decoding") {
    auto k = k3();
    auto enc = encode_tripartite(k);
    auto t1 = mccs_to_triset(
        k, enc, entities(enc.mrd, {"objects:u", "attributes:t0", "attributes:t",
                                   "conditions:r"}));
    REQUIRE(t1.has_value());
    CHECK(*t1 == triple(k, {"u"}, {"t0"}, {"r"}));

    auto t2 = mccs_to_triset(
        k, enc, entities(enc.mrd, {"objects:u", "attributes:t", "conditions:r0",
                                   "conditions:r"}));
    REQUIRE(t2.has_value());
    CHECK(*t2 == triple(k, {"u"}, {"t"}, {"r0"}));

    auto [ctx2, enc2] = encoded_k2();
    auto t3 = mccs_to_triset(
        ctx2, enc2, ents(enc2, {"objects:u1", "objects:u2", "attributes:t1",
                                "attributes:t2", "conditions:r1"}));
    REQUIRE(t3.has_value());
    CHECK(*t3 == triple(ctx2, {"u1", "u2"}, {"t1", "t2"}, {"r1"}));

    // isolated singleton MCCSs decode to nothing
    auto none = mccs_to_triset(ctx2, enc2, ents(enc2, {"objects:u3"}));
    CHECK_FALSE(none.has_value());

    CHECK_THROWS_AS(
        mccs_to_triset(ctx2, enc2, ents(enc2, {"objects:u1", "attributes:t1"})),
        InputError);
}

TEST_CASE("no phantoms means every mccs tuple is a triset") {
    std::vector<TriContext> cases = {k1(), k2(), diagonal_context(3),
                                     power_context(2)};
    for (int seed = 60; seed < 72; ++seed) cases.push_back(random_context(seed, 3));
    for (const auto& k : cases) {
        if (!phantom_edges(k).empty()) continue;
        auto enc = encode_tripartite(k);
        for (SmallSet m : enumerate_mccs(enc.mrd))
            CHECK(is_triset(k, tuple_of(enc.to_flat(m))));
    }
}

TEST_CASE("idempotency fixture pair") {
    Mrd left = ex1_left(), right = ex1_right();
    auto x = entities(left, {"R:r1", "R:r2", "P:p1"});
    auto all7 = entities(left, {"R:r1", "R:r2", "P:p1", "F:f", "U:u1", "U:u2",
                                "U:u3"});
    // stated compatible-set equalities
    CHECK(comp(left, x) == all7);
    CHECK(comp(left, x | entities(left, {"F:f"})) == all7);
    CHECK(g_close(left, x) == (x | entities(left, {"F:f"})));
    CHECK(g_close(left, g_close(left, x)) == all7); // idempotency fails

    auto xr = entities(right, {"R:r1", "R:r2", "P:p1"});
    auto all7r = entities(right, {"R:r1", "R:r2", "P:p1", "F:f", "U:u1", "U:u2",
                                  "U:u3"});
    CHECK(comp(right, xr) == all7r);
    CHECK(comp(right, xr | entities(right, {"F:f"})) ==
          all7r - entities(right, {"U:u3"}));
    CHECK(g_close(right, xr) == xr);
    CHECK(g_close(right, g_close(right, xr)) == xr);
}

TEST_CASE("adding isolated entities restores idempotency") {
    Mrd left = ex1_left();
    Mrd fixed = add_isolated_elements(left);
    CHECK(fixed.entity_count() == left.entity_count() + 4);
    for (SmallSet f : ccs_family(fixed).members) {
        if (f.empty()) continue;
        SmallSet g = g_close(fixed, f);
        CHECK(g_close(fixed, g) == g);
    }

    // already satisfied: encoded k2 has an isolated entity of every type
    auto enc = encode_tripartite(k2());
    CHECK(add_isolated_elements(enc.mrd).entity_count() ==
          enc.mrd.entity_count());

    Mrd single({"A"}, {{"a1", "a2"}}, {}, {});
    CHECK(add_isolated_elements(single).entity_count() == 2);
}

TEST_CASE("g-fixed non-maximal witnesses") {
    auto [ctx, enc] = encoded_k2();
    auto w = closed_non_maximal_witness(enc.mrd);
    REQUIRE(w.has_value());
    CHECK(*w == ents(enc, {"objects:u1", "objects:u2", "attributes:t1",
                           "conditions:r1"}));

    auto k3e = encode_tripartite(k3());
    auto w3 = closed_non_maximal_witness(k3e.mrd);
    REQUIRE(w3.has_value());
    CHECK(*w3 == entities(k3e.mrd, {"objects:u", "attributes:t", "conditions:r"}));

    Mrd single({"A", "B"}, {{"a"}, {"b"}}, {{"A", "B"}}, {{"A:a", "B:b"}});
    CHECK_FALSE(closed_non_maximal_witness(single).has_value());
}

TEST_CASE("mrd validation") {
    CHECK_THROWS_AS(Mrd({"A"}, {{"a"}}, {{"A", "A"}}, {}), InputError);
    CHECK_THROWS_AS(Mrd({"A", "B"}, {{"a"}, {"b"}}, {}, {{"A:a", "B:b"}}),
                    InputError);
    CHECK_THROWS_AS(Mrd({"A", "B"}, {{"a", "a"}, {"b"}}, {{"A", "B"}}, {}),
                    InputError);
}
