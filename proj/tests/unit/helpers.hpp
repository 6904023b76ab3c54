#ifndef MINMAXHOM_TEST_HELPERS_HPP
#define MINMAXHOM_TEST_HELPERS_HPP

#include <vector>

#include "minmaxhom/digraph.hpp"

namespace minmaxhom::testing {

inline Digraph directed_cycle(int k) {
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i) arcs.emplace_back(i, (i + 1) % k);
    return Digraph(k, std::move(arcs));
}

inline Digraph directed_path(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, std::move(arcs));
}

inline std::vector<int> all_vertices(const Digraph& d) {
    std::vector<int> v(d.vertex_count());
    for (int i = 0; i < d.vertex_count(); ++i) v[i] = i;
    return v;
}

/// Digraph on `n` vertices whose arc set is the bits of `mask`, ordered pairs
/// (u,v) scanned lexicographically; `loops` controls whether loop positions
/// are part of the mask.
inline Digraph from_mask(int n, unsigned mask, bool loops) {
    std::vector<Arc> arcs;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v && !loops) continue;
            if (mask & (1u << bit)) arcs.emplace_back(u, v);
            ++bit;
        }
    return Digraph(n, std::move(arcs));
}

}  // namespace minmaxhom::testing

#endif
