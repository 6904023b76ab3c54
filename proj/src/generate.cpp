#include "minmaxhom/generate.hpp"

#include <cmath>

namespace minmaxhom {

Digraph gen_random(const GeneratorSpec& spec) {
    SplitMix64 rng(spec.seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < spec.n; ++u)
        for (int v = 0; v < spec.n; ++v) {
            if (u == v && !spec.loops) continue;
            if (rng.next_unit() < spec.p) arcs.emplace_back(u, v);
        }
    return Digraph(spec.n, std::move(arcs));
}

Digraph gen_proper_interval(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    // Unit intervals with left endpoints spread over [0, n) so the
    // intersection graph is not trivially complete.
    std::vector<double> left(n);
    for (int i = 0; i < n; ++i) left[i] = rng.next_unit() * n;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(left[i] - left[j]) <= 1.0) arcs.emplace_back(i, j);
    return Digraph(n, std::move(arcs));
}

}  // namespace minmaxhom
