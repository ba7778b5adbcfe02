#include "triclique/dyadic.hpp"

#include <algorithm>

namespace triclique {

DyadicContext slice_context(const TriContext& k, SmallSet objs) {
    if (objs.empty())
        throw InputError("slice_context: object subset must be non-empty");
    if (!objs.subset_of(k.full(0)))
        throw InputError("slice_context: undeclared object");
    DyadicContext d;
    d.rows = k.size(1);
    d.cols = k.size(2);
    d.row_cols.assign(d.rows, {});
    for (int m = 0; m < d.rows; ++m)
        for (int b = 0; b < d.cols; ++b)
            if (!(k.fiber(0, m, b) & objs).empty())
                d.row_cols[m] = d.row_cols[m].with(b);
    return d;
}

namespace {

SmallSet rows_prime(const DyadicContext& d, SmallSet rows) {
    SmallSet acc = SmallSet::full(d.cols);
    for (int r : rows) acc = acc & d.row_cols[r];
    return acc;
}

SmallSet cols_prime(const DyadicContext& d, SmallSet cols) {
    SmallSet acc;
    for (int r = 0; r < d.rows; ++r)
        if (cols.subset_of(d.row_cols[r])) acc = acc.with(r);
    return acc;
}

} // namespace

std::vector<DyadicConcept> dyadic_concepts(const DyadicContext& d) {
    if (d.rows > SmallSet::kMaxGround)
        throw ResourceError("dyadic_concepts: too many rows");
    std::vector<DyadicConcept> out;
    auto add = [&](SmallSet extent, SmallSet intent) {
        DyadicConcept c{extent, intent};
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    // Close every row subset; small grounds make the full scan affordable.
    const std::uint64_t n = 1ull << d.rows;
    if (d.rows > 20)
        throw ResourceError("dyadic_concepts: row axis too large to enumerate");
    for (std::uint64_t bits = 0; bits < n; ++bits) {
        SmallSet rows{bits};
        SmallSet intent = rows_prime(d, rows);
        SmallSet extent = cols_prime(d, intent);
        if (extent == rows) add(extent, intent);
    }
    std::sort(out.begin(), out.end(),
              [](const DyadicConcept& a, const DyadicConcept& b) {
                  if (int c = lex_compare(a.extent, b.extent)) return c < 0;
                  return lex_compare(a.intent, b.intent) < 0;
              });
    return out;
}

bool is_ferrers_of_concepts(const DyadicContext& d) {
    auto cs = dyadic_concepts(d);
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            if (!cs[i].extent.subset_of(cs[j].extent) &&
                !cs[j].extent.subset_of(cs[i].extent))
                return false;
    return true;
}

} // namespace triclique
