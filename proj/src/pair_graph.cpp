#include "minmaxhom/pair_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace minmaxhom {

int PairGraph::index_of(int x, int y) const {
    int n = base_.vertex_count();
    if (x < 0 || x >= n || y < 0 || y >= n) return -1;
    return index_[static_cast<std::size_t>(x) * n + y];
}

PairGraph PairGraph::build(const Digraph& base,
                           std::optional<LevelAssignment> levels) {
    PairGraph pg;
    pg.base_ = base;
    int n = base.vertex_count();
    if (levels) {
        pg.levels_ = std::move(*levels);
        if (static_cast<int>(pg.levels_.levels.size()) != n)
            throw std::invalid_argument("level assignment size mismatch");
    } else {
        pg.levels_.k = 1;
        pg.levels_.levels.assign(n, 0);
    }
    const auto& lev = pg.levels_.levels;

    pg.index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (lev[x] < 0 || lev[x] != lev[y]) continue;
            pg.index_[static_cast<std::size_t>(x) * n + y] =
                static_cast<int>(pg.pairs_.size());
            pg.pairs_.emplace_back(x, y);
        }

    // One pair arc per ordered pair of base arcs; O(m^2) instead of O(n^4).
    std::vector<Arc> pair_arcs;
    for (auto [x, xp] : base.arcs())
        for (auto [y, yp] : base.arcs()) {
            int from = pg.index_of(x, y);
            if (from < 0) continue;
            int to = pg.index_of(xp, yp);
            if (to < 0) continue;
            if (base.has_arc(x, yp) && base.has_arc(y, xp)) continue;
            pair_arcs.emplace_back(from, to);
        }
    pg.graph_ = Digraph(static_cast<int>(pg.pairs_.size()), std::move(pair_arcs));

    auto comps = weak_components(pg.graph_);
    pg.component_of_.assign(pg.pairs_.size(), -1);
    pg.components_.resize(comps.size());
    for (std::size_t id = 0; id < comps.size(); ++id) {
        auto& info = pg.components_[id];
        info.id = static_cast<int>(id);
        info.members = comps[id];
        for (int m : info.members) pg.component_of_[m] = info.id;
        info.height = height_of(pg.graph_, info.members);
    }
    for (auto& info : pg.components_) {
        auto [x, y] = pg.pairs_[info.members.front()];
        int rev = pg.index_of(y, x);
        assert(rev >= 0);
        info.dual_id = pg.component_of_[rev];
        info.self_dual = info.dual_id == info.id;
    }
    return pg;
}

std::optional<SymInvertibleWitness> find_sym_invertible(const PairGraph& pg) {
    for (const auto& comp : pg.components()) {
        if (!comp.self_dual) continue;
        int start = comp.members.front();
        auto [u, v] = pg.pair_at(start);
        int goal = pg.index_of(v, u);

        // BFS over the pair graph traversed in both directions, out-arcs
        // first so canonical examples come out as forward walks.
        const Digraph& g = pg.graph();
        std::vector<int> parent(g.vertex_count(), -2);
        std::vector<Step> step(g.vertex_count(), Step::Forward);
        parent[start] = -1;
        std::vector<int> queue{start};
        for (std::size_t qi = 0; qi < queue.size() && parent[goal] == -2; ++qi) {
            int a = queue[qi];
            for (int b : g.out_neighbors(a))
                if (parent[b] == -2) {
                    parent[b] = a;
                    step[b] = Step::Forward;
                    queue.push_back(b);
                }
            for (int b : g.in_neighbors(a))
                if (parent[b] == -2) {
                    parent[b] = a;
                    step[b] = Step::Backward;
                    queue.push_back(b);
                }
        }
        assert(parent[goal] != -2);
        OrientedWalk walk;
        for (int x = goal; x >= 0; x = parent[x]) {
            walk.vertices.push_back(x);
            if (parent[x] >= 0) walk.steps.push_back(step[x]);
        }
        std::reverse(walk.vertices.begin(), walk.vertices.end());
        std::reverse(walk.steps.begin(), walk.steps.end());
        return SymInvertibleWitness{u, v, std::move(walk), comp.id};
    }
    return std::nullopt;
}

std::pair<OrientedWalk, OrientedWalk> extract_congruent_walks(
    const PairGraph& pg, const OrientedWalk& pair_walk) {
    if (!pair_walk.valid_in(pg.graph()))
        throw std::invalid_argument("walk is not valid in the pair graph");
    OrientedWalk p, q;
    for (int idx : pair_walk.vertices) {
        auto [x, y] = pg.pair_at(idx);
        p.vertices.push_back(x);
        q.vertices.push_back(y);
    }
    p.steps = pair_walk.steps;
    q.steps = pair_walk.steps;
    return {std::move(p), std::move(q)};
}

bool walks_avoid(const Digraph& host, const OrientedWalk& p,
                 const OrientedWalk& q) {
    if (p.steps.size() != q.steps.size() || p.steps != q.steps)
        throw std::invalid_argument("walks are not congruent");
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        int xi = p.vertices[i], xn = p.vertices[i + 1];
        int yi = q.vertices[i], yn = q.vertices[i + 1];
        (void)xn;
        bool fwd = p.steps[i] == Step::Forward;
        bool p_to_q = fwd ? host.has_arc(xi, yn) : host.has_arc(yn, xi);
        bool q_to_p = fwd ? host.has_arc(yi, p.vertices[i + 1])
                          : host.has_arc(p.vertices[i + 1], yi);
        if (p_to_q && q_to_p) return false;
    }
    return true;
}

}  // namespace minmaxhom
