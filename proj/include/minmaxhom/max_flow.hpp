#ifndef MINMAXHOM_MAX_FLOW_HPP
#define MINMAXHOM_MAX_FLOW_HPP

#include <cstdint>
#include <vector>

namespace minmaxhom {

/// Dinic's algorithm on 64-bit integer capacities, exact.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

    int add_edge(int from, int to, std::int64_t cap);
    std::int64_t run(int source, int sink);

    /// Vertices reachable from `source` in the residual graph; call after run.
    std::vector<char> min_cut_side(int source) const;

    std::int64_t residual(int edge_id) const { return edges_[edge_id].cap; }

private:
    struct Edge {
        int to;
        int next;
        std::int64_t cap;
    };
    bool bfs(int source, int sink);
    std::int64_t dfs(int v, int sink, std::int64_t limit);

    std::vector<Edge> edges_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace minmaxhom

#endif
