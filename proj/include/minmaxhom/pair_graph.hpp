#ifndef MINMAXHOM_PAIR_GRAPH_HPP
#define MINMAXHOM_PAIR_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "minmaxhom/digraph.hpp"

namespace minmaxhom {

struct PairComponentInfo {
    int id = -1;
    std::vector<int> members;  // pair indices, sorted ascending
    int dual_id = -1;
    Height height;
    bool self_dual = false;
};

/// The derived digraph on ordered pairs of distinct vertices of the base.
/// With a modulus k > 1 only equal-level pairs are kept. An arc
/// (x,y) -> (x',y') exists iff xx' and yy' are arcs of the base but xy' and
/// yx' are not both arcs.
class PairGraph {
public:
    static PairGraph build(const Digraph& base,
                           std::optional<LevelAssignment> levels = std::nullopt);

    const Digraph& base() const { return base_; }
    const LevelAssignment& levels() const { return levels_; }
    int modulus() const { return levels_.k; }

    int pair_count() const { return static_cast<int>(pairs_.size()); }
    /// Dense index of pair (x,y), or -1 if not a pair vertex.
    int index_of(int x, int y) const;
    Arc pair_at(int idx) const { return pairs_[idx]; }

    /// The pair graph itself, as a digraph on dense pair indices.
    const Digraph& graph() const { return graph_; }

    int component_of(int pair_idx) const { return component_of_[pair_idx]; }
    const std::vector<PairComponentInfo>& components() const {
        return components_;
    }

private:
    Digraph base_;
    LevelAssignment levels_;
    std::vector<int> index_;   // n*n entries, -1 where absent
    std::vector<Arc> pairs_;   // dense index -> (x,y), lexicographic
    Digraph graph_;
    std::vector<int> component_of_;
    std::vector<PairComponentInfo> components_;
};

struct SymInvertibleWitness {
    int u = -1;
    int v = -1;
    OrientedWalk pair_walk;  // over pair indices, from (u,v) to (v,u)
    int component_id = -1;
};

/// Witness from the smallest self-dual component, if any component is
/// self-dual; the pair (u,v) is the component's lexicographically least member.
std::optional<SymInvertibleWitness> find_sym_invertible(const PairGraph& pg);

/// Projects a pair-graph walk onto its two coordinates, yielding congruent
/// walks in the base digraph that avoid each other.
std::pair<OrientedWalk, OrientedWalk> extract_congruent_walks(
    const PairGraph& pg, const OrientedWalk& pair_walk);

/// Literal avoidance predicate on congruent walks: no position i has faithful
/// arcs both from P to Q and from Q to P.
bool walks_avoid(const Digraph& host, const OrientedWalk& p,
                 const OrientedWalk& q);

}  // namespace minmaxhom

#endif
