#include "fixtures.hpp"

namespace fixtures {

TriContext k1() {
    return TriContext({"u1", "u2", "u3"}, {"t1", "t2", "t3"}, {"r1", "r2"},
                      {{"u1", "t1", "r1"},
                       {"u1", "t2", "r1"},
                       {"u2", "t1", "r1"},
                       {"u2", "t2", "r1"},
                       {"u1", "t1", "r2"},
                       {"u2", "t1", "r2"}});
}

TriContext k2() {
    return TriContext({"u1", "u2", "u3"}, {"t1", "t2", "t3"}, {"r1", "r2", "r3"},
                      {{"u1", "t1", "r1"},
                       {"u1", "t2", "r1"},
                       {"u2", "t1", "r1"},
                       {"u2", "t2", "r1"},
                       {"u1", "t1", "r2"},
                       {"u2", "t1", "r2"}});
}

TriContext k3() {
    return TriContext({"u", "u0"}, {"t", "t0"}, {"r", "r0"},
                      {{"u", "t", "r0"}, {"u", "t0", "r"}, {"u0", "t", "r"}});
}

TriContext k4() {
    std::vector<std::array<std::string, 3>> triples;
    auto layer = [&](const char* r,
                     const std::vector<std::pair<const char*, const char*>>& cells) {
        for (auto [u, t] : cells) triples.push_back({u, t, r});
    };
    layer("r1", {{"u1", "t1"}, {"u1", "t2"}, {"u1", "t3"}, {"u1", "t4"},
                 {"u2", "t2"}, {"u2", "t3"}, {"u2", "t4"},
                 {"u3", "t2"}, {"u3", "t3"}, {"u3", "t4"},
                 {"u4", "t4"}});
    layer("r2", {{"u1", "t2"}, {"u1", "t3"}, {"u1", "t4"},
                 {"u2", "t2"}, {"u2", "t3"}, {"u2", "t4"},
                 {"u3", "t3"}, {"u3", "t4"}});
    layer("r3", {{"u1", "t4"}});
    return TriContext({"u1", "u2", "u3", "u4"}, {"t1", "t2", "t3", "t4"},
                      {"r1", "r2", "r3"}, triples);
}

namespace {

Mrd ex1(bool with_f_u3) {
    std::vector<std::pair<std::string, std::string>> edges = {
        {"R:r1", "P:p1"}, {"R:r2", "P:p1"}, {"R:r1", "F:f"}, {"R:r2", "F:f"},
        {"F:f", "U:u1"},  {"F:f", "U:u2"}};
    if (with_f_u3) edges.push_back({"F:f", "U:u3"});
    return Mrd({"R", "P", "F", "U"},
               {{"r1", "r2"}, {"p1"}, {"f"}, {"u1", "u2", "u3"}},
               {{"R", "P"}, {"R", "F"}, {"U", "F"}}, edges);
}

} // namespace

Mrd ex1_left() { return ex1(true); }
Mrd ex1_right() { return ex1(false); }

namespace {

SmallSet axis_set(const TriContext& k, int axis,
                  const std::vector<std::string>& labels) {
    SmallSet s;
    for (const auto& l : labels) s = s.with(k.index_of(axis, l));
    return s;
}

} // namespace

SmallSet objs(const TriContext& k, const std::vector<std::string>& labels) {
    return axis_set(k, 0, labels);
}
SmallSet atts(const TriContext& k, const std::vector<std::string>& labels) {
    return axis_set(k, 1, labels);
}
SmallSet conds(const TriContext& k, const std::vector<std::string>& labels) {
    return axis_set(k, 2, labels);
}

Triset triple(const TriContext& k, const std::vector<std::string>& x,
              const std::vector<std::string>& y,
              const std::vector<std::string>& z) {
    return {objs(k, x), atts(k, y), conds(k, z)};
}

SmallSet entities(const Mrd& d, const std::vector<std::string>& qualified) {
    SmallSet s;
    for (const auto& q : qualified) s = s.with(d.entity_index(q));
    return s;
}

} // namespace fixtures
