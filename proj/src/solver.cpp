#include "minmaxhom/solver.hpp"

#include <algorithm>
#include <cassert>

#include "minmaxhom/max_flow.hpp"

namespace minmaxhom {

std::optional<std::vector<std::vector<int>>> prune_lists(
    const Digraph& instance, const Digraph& templ, int k,
    const std::vector<int>& instance_levels,
    const std::vector<std::vector<int>>& template_orders, int offset) {
    int ng = instance.vertex_count();
    std::vector<std::vector<int>> lists(ng);
    for (int u = 0; u < ng; ++u) {
        const auto& cls = template_orders[(instance_levels[u] + offset) % k];
        if (instance.has_loop(u)) {
            for (int v : cls)
                if (templ.has_loop(v)) lists[u].push_back(v);
        } else {
            lists[u] = cls;
        }
        if (lists[u].empty()) return std::nullopt;
    }

    // Round-robin arc consistency to fixpoint. Loop arcs are already fully
    // enforced by the loop filter above.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, w] : instance.arcs()) {
            if (u == w) continue;
            auto supported_out = [&](int v) {
                for (int vp : lists[w])
                    if (templ.has_arc(v, vp)) return true;
                return false;
            };
            auto supported_in = [&](int vp) {
                for (int v : lists[u])
                    if (templ.has_arc(v, vp)) return true;
                return false;
            };
            std::size_t before = lists[u].size();
            std::erase_if(lists[u], [&](int v) { return !supported_out(v); });
            if (lists[u].empty()) return std::nullopt;
            std::size_t before_w = lists[w].size();
            std::erase_if(lists[w], [&](int vp) { return !supported_in(vp); });
            if (lists[w].empty()) return std::nullopt;
            if (lists[u].size() != before || lists[w].size() != before_w)
                changed = true;
        }
    }
    return lists;
}

Staircase staircase(const std::vector<int>& list_u,
                    const std::vector<int>& list_w, const Digraph& templ) {
    Staircase st;
    int tw = static_cast<int>(list_w.size());
    for (int v : list_u) {
        int lo = -1, hi = -1, count = 0;
        for (int idx = 0; idx < tw; ++idx)
            if (templ.has_arc(v, list_w[idx])) {
                if (lo < 0) lo = idx;
                hi = idx;
                ++count;
            }
        if (lo < 0) throw StaircaseViolation("candidate with empty neighbor row");
        if (count != hi - lo + 1)
            throw StaircaseViolation("neighbor row is not an interval");
        if (!st.lo.empty() && (lo < st.lo.back() || hi < st.hi.back()))
            throw StaircaseViolation("interval endpoints are not monotone");
        st.lo.push_back(lo);
        st.hi.push_back(hi);
    }
    return st;
}

std::optional<std::pair<std::int64_t, std::vector<int>>> solve_component(
    const Digraph& instance, const Digraph& templ,
    const std::vector<std::vector<int>>& lists,
    const std::vector<std::vector<std::int64_t>>& costs) {
    int ng = instance.vertex_count();
    std::int64_t inf = 1;
    for (int u = 0; u < ng; ++u)
        inf += *std::max_element(costs[u].begin(), costs[u].end());

    // Node layout: 0 = source, 1 = sink, then t-1 internal nodes per chain.
    std::vector<int> base(ng);
    int nodes = 2;
    for (int u = 0; u < ng; ++u) {
        base[u] = nodes;
        nodes += static_cast<int>(lists[u].size()) - 1;
    }
    auto node = [&](int u, int j) {  // j in 1..t+1
        int t = static_cast<int>(lists[u].size());
        if (j <= 1) return 0;
        if (j >= t + 1) return 1;
        return base[u] + j - 2;
    };

    MaxFlow mf(nodes);
    for (int u = 0; u < ng; ++u) {
        int t = static_cast<int>(lists[u].size());
        for (int j = 1; j <= t; ++j)
            mf.add_edge(node(u, j), node(u, j + 1), costs[u][lists[u][j - 1]]);
        for (int j = 2; j < t; ++j) mf.add_edge(node(u, j + 1), node(u, j), inf);
    }
    for (auto [a, b] : instance.arcs()) {
        if (a == b) continue;
        Staircase st = staircase(lists[a], lists[b], templ);
        int ta = static_cast<int>(lists[a].size());
        int tb = static_cast<int>(lists[b].size());
        for (int j = 1; j <= ta; ++j) {
            int lo1 = st.lo[j - 1] + 1;
            if (node(a, j) != node(b, lo1))
                mf.add_edge(node(a, j), node(b, lo1), inf);
            int hi1 = st.hi[j - 1] + 1;
            if (hi1 + 1 <= tb) mf.add_edge(node(b, hi1 + 1), node(a, j + 1), inf);
        }
    }

    std::int64_t flow = mf.run(0, 1);
    if (flow >= inf) return std::nullopt;

    auto side = mf.min_cut_side(0);
    std::vector<int> mapping(ng);
    for (int u = 0; u < ng; ++u) {
        int t = static_cast<int>(lists[u].size());
        int crossings = 0, pick = 0;
        for (int j = 1; j <= t; ++j) {
            if (side[node(u, j)]) pick = j;
            if (side[node(u, j)] && !side[node(u, j + 1)]) ++crossings;
        }
        if (crossings != 1)
            throw std::logic_error("min cut does not sever exactly one chain arc");
        mapping[u] = pick - 1;
    }
    // Recompute the objective from the recovered mapping; it must equal the
    // cut value.
    std::int64_t total = 0;
    for (int u = 0; u < ng; ++u) total += costs[u][lists[u][mapping[u]]];
    if (total != flow)
        throw std::logic_error("cut value does not match recovered mapping cost");
    return std::make_pair(flow, std::move(mapping));
}

bool is_homomorphism(const Digraph& g, const Digraph& h,
                     const std::vector<int>& mapping) {
    if (static_cast<int>(mapping.size()) != g.vertex_count()) return false;
    for (int v : mapping)
        if (v < 0 || v >= h.vertex_count()) return false;
    for (auto [u, v] : g.arcs())
        if (!h.has_arc(mapping[u], mapping[v])) return false;
    return true;
}

Solution solve_polynomial(const Digraph& h, const Classification& cls,
                          const CostInstance& inst) {
    if (!cls.polynomial())
        throw std::invalid_argument("template classification is not polynomial");
    int ng = inst.g.vertex_count();
    int nh = h.vertex_count();
    if (static_cast<int>(inst.costs.size()) != ng)
        throw std::invalid_argument("cost matrix row count mismatch");
    for (const auto& row : inst.costs)
        if (static_cast<int>(row.size()) != nh)
            throw std::invalid_argument("cost matrix column count mismatch");

    // Template components in local form, once.
    struct LocalTemplate {
        InducedSubdigraph sub;
        int k;
        std::vector<std::vector<int>> orders_local;
    };
    std::vector<LocalTemplate> templates;
    for (const auto& cc : cls.components) {
        LocalTemplate lt{induced_subdigraph(h, cc.vertices), cc.k, {}};
        std::vector<int> gpos(nh, -1);
        for (std::size_t i = 0; i < lt.sub.local_to_global.size(); ++i)
            gpos[lt.sub.local_to_global[i]] = static_cast<int>(i);
        for (const auto& clsorder : cc.orders) {
            std::vector<int> local;
            for (int v : clsorder) local.push_back(gpos[v]);
            lt.orders_local.push_back(std::move(local));
        }
        templates.push_back(std::move(lt));
    }

    Solution sol;
    sol.status = Solution::Status::Optimal;
    sol.cost = 0;
    sol.mapping.assign(ng, -1);

    for (const auto& gamma : weak_components(inst.g)) {
        auto gl = induced_subdigraph(inst.g, gamma);
        int nl = gl.graph.vertex_count();
        std::vector<int> all(nl);
        for (int i = 0; i < nl; ++i) all[i] = i;

        bool found = false;
        std::int64_t best_cost = 0;
        std::vector<int> best_map;  // local instance vertex -> global template id

        for (const auto& lt : templates) {
            LevelResult lr = level_assignment(gl.graph, all, lt.k);
            if (!lr.ok()) continue;
            std::vector<std::vector<std::int64_t>> local_costs(nl);
            for (int a = 0; a < nl; ++a) {
                local_costs[a].reserve(lt.sub.local_to_global.size());
                for (int tg : lt.sub.local_to_global)
                    local_costs[a].push_back(inst.costs[gl.local_to_global[a]][tg]);
            }
            for (int offset = 0; offset < lt.k; ++offset) {
                auto lists = prune_lists(gl.graph, lt.sub.graph, lt.k,
                                         lr.assignment->levels, lt.orders_local,
                                         offset);
                if (!lists) continue;
                auto res = solve_component(gl.graph, lt.sub.graph, *lists,
                                           local_costs);
                if (!res) continue;
                if (!found || res->first < best_cost) {
                    found = true;
                    best_cost = res->first;
                    best_map.assign(nl, -1);
                    for (int a = 0; a < nl; ++a)
                        best_map[a] =
                            lt.sub.local_to_global[(*lists)[a][res->second[a]]];
                }
            }
        }
        if (!found) return Solution{};  // Infeasible
        sol.cost += best_cost;
        for (int a = 0; a < nl; ++a)
            sol.mapping[gl.local_to_global[a]] = best_map[a];
    }

    if (!is_homomorphism(inst.g, h, sol.mapping))
        throw std::logic_error("solver produced a non-homomorphism");
    return sol;
}

namespace {

bool guard_ok(std::int64_t nh, int ng, std::int64_t guard) {
    std::int64_t total = 1;
    for (int i = 0; i < ng; ++i) {
        if (nh != 0 && total > guard / nh + 1) return false;
        total *= nh;
        if (total > guard) return false;
    }
    return true;
}

}  // namespace

Solution solve_bruteforce(const Digraph& h, const CostInstance& inst,
                          std::int64_t guard) {
    int ng = inst.g.vertex_count();
    int nh = h.vertex_count();
    if (static_cast<int>(inst.costs.size()) != ng)
        throw std::invalid_argument("cost matrix row count mismatch");
    if (!guard_ok(nh, ng, guard))
        throw GuardExceeded("search space exceeds guard");

    Solution best;
    if (ng == 0) {
        best.status = Solution::Status::Optimal;
        return best;
    }
    if (nh == 0) return best;

    std::vector<int> map(ng, -1);
    std::int64_t partial = 0;

    // Lexicographic backtracking; the first optimum found is the
    // lexicographically smallest optimal mapping.
    auto consistent = [&](int u, int v) {
        for (int w : inst.g.out_neighbors(u))
            if (w <= u && !h.has_arc(v, map[w])) return false;
        for (int w : inst.g.in_neighbors(u))
            if (w <= u && !h.has_arc(map[w], v)) return false;
        return true;
    };
    int depth = 0;
    std::vector<int> choice(ng, -1);
    while (depth >= 0) {
        if (depth == ng) {
            if (!best.optimal() || partial < best.cost) {
                best.status = Solution::Status::Optimal;
                best.cost = partial;
                best.mapping = map;
            }
            --depth;
            if (depth >= 0) partial -= inst.costs[depth][map[depth]];
            continue;
        }
        int v = choice[depth] + 1;
        bool advanced = false;
        for (; v < nh; ++v) {
            map[depth] = v;
            if (!consistent(depth, v)) continue;
            if (best.optimal() && partial + inst.costs[depth][v] >= best.cost)
                continue;
            choice[depth] = v;
            partial += inst.costs[depth][v];
            ++depth;
            if (depth < ng) choice[depth] = -1;
            advanced = true;
            break;
        }
        if (!advanced) {
            choice[depth] = -1;
            --depth;
            if (depth >= 0) partial -= inst.costs[depth][map[depth]];
        }
    }
    return best;
}

}  // namespace minmaxhom
