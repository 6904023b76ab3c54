#include "minmaxhom/ordering.hpp"

#include <algorithm>
#include <cassert>

namespace minmaxhom {

std::optional<std::vector<int>> circular_chain_in(
    int n, const std::vector<Arc>& pairs) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : pairs) adj[a].push_back(b);
    for (auto& v : adj) std::sort(v.begin(), v.end());

    enum : char { White, Gray, Black };
    std::vector<char> color(n, White);
    std::vector<int> path;
    // stack of (vertex, index of next neighbor to explore)
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < n; ++root) {
        if (color[root] != White) continue;
        stack.emplace_back(root, 0);
        color[root] = Gray;
        path.push_back(root);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                int w = adj[v][next++];
                if (color[w] == Gray) {
                    auto it = std::find(path.begin(), path.end(), w);
                    return std::vector<int>(it, path.end());
                }
                if (color[w] == White) {
                    color[w] = Gray;
                    path.push_back(w);
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = Black;
                path.pop_back();
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

namespace {

CircularChain chain_from_cycle(const std::vector<int>& cycle, int component_id) {
    CircularChain c;
    c.component_id = component_id;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        c.pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    return c;
}

}  // namespace

AdmitsResult admits_ordering(const PairGraph& pg) {
    if (auto si = find_sym_invertible(pg)) {
        CircularChain c;
        c.component_id = si->component_id;
        c.pairs = {{si->u, si->v}, {si->v, si->u}};
        return AdmitsResult{false, std::move(c)};
    }
    int n = pg.base().vertex_count();
    for (const auto& comp : pg.components()) {
        std::vector<Arc> pairs;
        pairs.reserve(comp.members.size());
        for (int m : comp.members) pairs.push_back(pg.pair_at(m));
        if (auto cycle = circular_chain_in(n, pairs))
            return AdmitsResult{false, chain_from_cycle(*cycle, comp.id)};
    }
    return AdmitsResult{true, {}};
}

KMinMaxOrdering synthesize_ordering(const Digraph& h, const PairGraph& pg,
                                    std::vector<Height>* trace) {
    int n = h.vertex_count();
    // Components by decreasing height, infinite first; ties broken by the
    // lexicographically smallest member pair (= smallest dense pair index).
    std::vector<int> order(pg.components().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto higher = [&](int a, int b) {
        const Height& ha = pg.components()[a].height;
        const Height& hb = pg.components()[b].height;
        if (ha.infinite != hb.infinite) return ha.infinite;
        if (!ha.infinite && ha.value != hb.value) return ha.value > hb.value;
        return pg.components()[a].members.front() <
               pg.components()[b].members.front();
    };
    std::stable_sort(order.begin(), order.end(), higher);

    std::vector<char> processed(pg.components().size(), 0);
    std::vector<Arc> chosen;
    for (int id : order) {
        if (processed[id]) continue;
        const auto& comp = pg.components()[id];
        const auto& dual = pg.components()[comp.dual_id];
        processed[comp.id] = processed[dual.id] = 1;
        if (trace) trace->push_back(comp.height);

        std::size_t undo_mark = chosen.size();
        for (int m : comp.members) chosen.push_back(pg.pair_at(m));
        auto cycle = circular_chain_in(n, chosen);
        if (!cycle) continue;
        CircularChain first = chain_from_cycle(*cycle, comp.id);

        chosen.resize(undo_mark);
        for (int m : dual.members) chosen.push_back(pg.pair_at(m));
        auto cycle2 = circular_chain_in(n, chosen);
        if (!cycle2) continue;
        throw InternalInvariantViolation(
            "both a component and its dual create circular chains",
            std::move(first), chain_from_cycle(*cycle2, dual.id));
    }

    KMinMaxOrdering ord;
    ord.k = pg.modulus();
    ord.levels = pg.levels();
    ord.orders.resize(ord.k);

    // The chosen relation is an acyclic tournament on each level class;
    // Kahn's algorithm with a smallest-id frontier yields its unique order.
    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : chosen) adj[a].push_back(b), ++indeg[b];
    for (int t = 0; t < ord.k; ++t) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (ord.levels.levels[v] == t) members.push_back(v);
        std::vector<int> deg(n, 0);
        std::vector<char> in_class(n, 0);
        for (int v : members) in_class[v] = 1;
        for (int v : members)
            for (int w : adj[v])
                if (in_class[w]) ++deg[w];
        std::vector<int> frontier;
        for (int v : members)
            if (deg[v] == 0) frontier.push_back(v);
        std::sort(frontier.rbegin(), frontier.rend());
        auto& out = ord.orders[t];
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            out.push_back(v);
            for (int w : adj[v])
                if (in_class[w] && --deg[w] == 0) {
                    frontier.push_back(w);
                    std::sort(frontier.rbegin(), frontier.rend());
                }
        }
        assert(out.size() == members.size());
    }
    return ord;
}

VerifyResult verify_ordering(const Digraph& h, const KMinMaxOrdering& ord) {
    VerifyResult res;
    int n = h.vertex_count();
    auto fail = [&](std::string msg) {
        res.ok = false;
        res.structural_error = std::move(msg);
        return res;
    };
    if (ord.k < 1 || static_cast<int>(ord.orders.size()) != ord.k)
        return fail("order list count does not match modulus");
    if (static_cast<int>(ord.levels.levels.size()) != n ||
        ord.levels.k != ord.k)
        return fail("level assignment does not match digraph/modulus");
    std::vector<int> count(n, 0);
    for (int t = 0; t < ord.k; ++t)
        for (int v : ord.orders[t]) {
            if (v < 0 || v >= n) return fail("vertex id out of range");
            ++count[v];
            if (ord.levels.levels[v] != t)
                return fail("vertex listed outside its level class");
        }
    for (int v = 0; v < n; ++v)
        if (count[v] != 1) return fail("vertex missing or duplicated");
    for (auto [u, v] : h.arcs())
        if (ord.levels.levels[v] != (ord.levels.levels[u] + 1) % ord.k)
            return fail("level assignment violates an arc");

    for (int t = 0; t < ord.k; ++t) {
        const auto& a = ord.orders[t];
        const auto& b = ord.orders[(t + 1) % ord.k];
        for (std::size_t ii = 0; ii < a.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < a.size(); ++jj)
                for (std::size_t ss = 0; ss < b.size(); ++ss)
                    for (std::size_t rr = ss + 1; rr < b.size(); ++rr) {
                        int i = a[ii], j = a[jj], s = b[ss], r = b[rr];
                        if (!h.has_arc(i, r) || !h.has_arc(j, s)) continue;
                        if (h.has_arc(i, s) && h.has_arc(j, r)) continue;
                        res.ok = false;
                        res.i = i;
                        res.j = j;
                        res.s = s;
                        res.r = r;
                        res.missing = !h.has_arc(i, s) ? Arc{i, s} : Arc{j, r};
                        return res;
                    }
    }
    return res;
}

bool check_certificate(const PairGraph& pg, const CircularChain& chain) {
    if (chain.pairs.size() < 2) return false;
    int comp = -1;
    for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
        auto [a, b] = chain.pairs[i];
        if (b != chain.pairs[(i + 1) % chain.pairs.size()].first) return false;
        int idx = pg.index_of(a, b);
        if (idx < 0) return false;
        int c = pg.component_of(idx);
        if (comp < 0) comp = c;
        if (c != comp) return false;
    }
    return true;
}

}  // namespace minmaxhom
