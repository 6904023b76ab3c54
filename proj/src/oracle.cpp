#include "minmaxhom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace minmaxhom {

std::optional<KMinMaxOrdering> oracle_ordering(const Digraph& h, int k,
                                               const LevelAssignment& levels,
                                               std::int64_t guard) {
    std::vector<std::vector<int>> classes(k);
    for (int v = 0; v < h.vertex_count(); ++v) {
        int t = levels.levels[v];
        if (t < 0 || t >= k) throw std::invalid_argument("invalid levels");
        classes[t].push_back(v);
    }
    long double total = 1;
    for (const auto& cls : classes)
        for (std::size_t i = 2; i <= cls.size(); ++i) total *= i;
    if (total > static_cast<long double>(guard))
        throw GuardExceeded("permutation count exceeds guard");

    // Odometer over per-class permutations, class 0 most significant, each
    // class starting from its ascending order.
    KMinMaxOrdering ord;
    ord.k = k;
    ord.levels = levels;
    ord.levels.k = k;
    ord.orders = classes;
    while (true) {
        if (verify_ordering(h, ord).ok) return ord;
        int c = k - 1;
        while (c >= 0 && !std::next_permutation(ord.orders[c].begin(),
                                                ord.orders[c].end()))
            --c;
        if (c < 0) return std::nullopt;
    }
}

namespace {

/// Checks whether the subset induces a single oriented cycle in h and
/// reports its normalized net length.
std::optional<InducedCycle> induced_cycle_of(const Digraph& h,
                                             const std::vector<int>& subset) {
    std::size_t len = subset.size();
    if (len == 1) {
        int u = subset[0];
        if (!h.has_loop(u)) return std::nullopt;
        return InducedCycle{{u}, 1};
    }
    for (int u : subset)
        if (h.has_loop(u)) return std::nullopt;
    if (len == 2) {
        int u = subset[0], v = subset[1];
        if (h.has_arc(u, v) && h.has_arc(v, u))
            return InducedCycle{{u, v}, 2};
        return std::nullopt;
    }
    // Underlying graph must be a single cycle, with exactly one arc per edge.
    std::vector<std::vector<int>> nbr(len);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            bool fwd = h.has_arc(subset[i], subset[j]);
            bool bwd = h.has_arc(subset[j], subset[i]);
            if (fwd && bwd) return std::nullopt;
            if (fwd || bwd) {
                nbr[i].push_back(static_cast<int>(j));
                nbr[j].push_back(static_cast<int>(i));
            }
        }
    for (const auto& v : nbr)
        if (v.size() != 2) return std::nullopt;
    // Traverse from position 0 toward its smaller neighbor.
    std::vector<int> order{0};
    int prev = 0, cur = std::min(nbr[0][0], nbr[0][1]);
    while (cur != 0) {
        order.push_back(cur);
        int nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (order.size() != len) return std::nullopt;  // disconnected
    int net = 0;
    InducedCycle cyc;
    for (std::size_t i = 0; i < len; ++i) {
        int a = subset[order[i]], b = subset[order[(i + 1) % len]];
        cyc.vertices.push_back(a);
        net += h.has_arc(a, b) ? 1 : -1;
    }
    cyc.net_length = std::abs(net);
    return cyc;
}

}  // namespace

std::vector<InducedCycle> oracle_induced_cycles(const Digraph& h, int max_len,
                                                std::int64_t guard) {
    int n = h.vertex_count();
    max_len = std::min(max_len, n);
    long double subsets = 0;
    for (int s = 1; s <= max_len; ++s) {
        long double c = 1;
        for (int i = 0; i < s; ++i) c = c * (n - i) / (i + 1);
        subsets += c;
    }
    if (subsets > static_cast<long double>(guard))
        throw GuardExceeded("subset count exceeds guard");

    std::vector<InducedCycle> found;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
        if (!subset.empty())
            if (auto cyc = induced_cycle_of(h, subset))
                found.push_back(std::move(*cyc));
        if (static_cast<int>(subset.size()) == max_len) return;
        for (int v = next; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(found.begin(), found.end(),
                     [](const InducedCycle& a, const InducedCycle& b) {
                         return a.vertices.size() < b.vertices.size();
                     });
    return found;
}

}  // namespace minmaxhom
