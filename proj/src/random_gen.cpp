#include "triclique/random_gen.hpp"

#include <random>

namespace triclique {

namespace {

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

bool chance(std::mt19937_64& rng, int permille) {
    return next_below(rng, 1000) < static_cast<std::uint64_t>(permille);
}

} // namespace

TriContext random_context(std::uint64_t seed, int max_per_axis, bool fixed_size) {
    std::mt19937_64 rng(0x7c0a73c7ull ^ seed);
    auto axis_size = [&] {
        return fixed_size ? max_per_axis
                          : 1 + static_cast<int>(next_below(rng, max_per_axis));
    };
    int ng = axis_size(), nm = axis_size(), nb = axis_size();
    int density = 200 + static_cast<int>(next_below(rng, 450));
    auto labels = [](const char* p, int n) {
        std::vector<std::string> out;
        for (int i = 1; i <= n; ++i) out.push_back(p + std::to_string(i));
        return out;
    };
    auto gs = labels("g", ng), ms = labels("m", nm), bs = labels("b", nb);
    std::vector<std::array<std::string, 3>> triples;
    for (int g = 0; g < ng; ++g)
        for (int m = 0; m < nm; ++m)
            for (int b = 0; b < nb; ++b)
                if (chance(rng, density))
                    triples.push_back({gs[g], ms[m], bs[b]});
    return TriContext(gs, ms, bs, triples);
}

Mrd random_mrd(std::uint64_t seed, int max_entities) {
    std::mt19937_64 rng(0x6d726472616e64ull ^ seed);
    int nt = 2 + static_cast<int>(next_below(rng, 2)); // 2 or 3 types
    std::vector<std::string> types;
    for (int t = 0; t < nt; ++t) types.push_back(std::string(1, char('A' + t)));

    int ne = nt + static_cast<int>(next_below(rng, max_entities - nt + 1));
    std::vector<std::vector<std::string>> entities(nt);
    for (int e = 0; e < ne; ++e) {
        int t = e < nt ? e : static_cast<int>(next_below(rng, nt));
        entities[t].push_back(types[t] + std::to_string(entities[t].size() + 1));
    }

    std::vector<std::pair<std::string, std::string>> rel;
    std::vector<std::vector<bool>> related(nt, std::vector<bool>(nt, false));
    for (int s = 0; s < nt; ++s)
        for (int t = s + 1; t < nt; ++t)
            if (chance(rng, 700)) {
                rel.emplace_back(types[s], types[t]);
                related[s][t] = related[t][s] = true;
            }
    if (rel.empty()) {
        rel.emplace_back(types[0], types[1]);
        related[0][1] = related[1][0] = true;
    }

    int density = 300 + static_cast<int>(next_below(rng, 400));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int s = 0; s < nt; ++s)
        for (int t = s + 1; t < nt; ++t) {
            if (!related[s][t]) continue;
            for (const auto& a : entities[s])
                for (const auto& b : entities[t])
                    if (chance(rng, density))
                        edges.emplace_back(types[s] + ":" + a, types[t] + ":" + b);
        }
    return Mrd(types, entities, rel, edges);
}

} // namespace triclique
