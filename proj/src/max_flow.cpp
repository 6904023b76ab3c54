#include "minmaxhom/max_flow.hpp"

#include <algorithm>
#include <limits>

namespace minmaxhom {

int MaxFlow::add_edge(int from, int to, std::int64_t cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, head_[from], cap});
    head_[from] = id;
    edges_.push_back({from, head_[to], 0});
    head_[to] = id + 1;
    return id;
}

bool MaxFlow::bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{source};
    level_[source] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int e = head_[v]; e >= 0; e = edges_[e].next) {
            if (edges_[e].cap <= 0 || level_[edges_[e].to] >= 0) continue;
            level_[edges_[e].to] = level_[v] + 1;
            queue.push_back(edges_[e].to);
        }
    }
    return level_[sink] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int sink, std::int64_t limit) {
    if (v == sink) return limit;
    std::int64_t pushed = 0;
    for (int& e = iter_[v]; e >= 0; e = edges_[e].next) {
        Edge& edge = edges_[e];
        if (edge.cap <= 0 || level_[edge.to] != level_[v] + 1) continue;
        std::int64_t got = dfs(edge.to, sink, std::min(limit - pushed, edge.cap));
        if (got <= 0) continue;
        edge.cap -= got;
        edges_[e ^ 1].cap += got;
        pushed += got;
        if (pushed == limit) return pushed;
    }
    level_[v] = -1;
    return pushed;
}

std::int64_t MaxFlow::run(int source, int sink) {
    std::int64_t flow = 0;
    while (bfs(source, sink)) {
        iter_ = head_;
        flow += dfs(source, sink, std::numeric_limits<std::int64_t>::max());
    }
    return flow;
}

std::vector<char> MaxFlow::min_cut_side(int source) const {
    std::vector<char> side(head_.size(), 0);
    std::vector<int> queue{source};
    side[source] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int e = head_[v]; e >= 0; e = edges_[e].next)
            if (edges_[e].cap > 0 && !side[edges_[e].to]) {
                side[edges_[e].to] = 1;
                queue.push_back(edges_[e].to);
            }
    }
    return side;
}

}  // namespace minmaxhom
