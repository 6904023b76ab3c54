#ifndef MINMAXHOM_SOLVER_HPP
#define MINMAXHOM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minmaxhom/classify.hpp"

namespace minmaxhom {

/// Instance digraph with per-vertex cost vectors; costs[u][i] is the cost of
/// mapping instance vertex u to template vertex i.
struct CostInstance {
    Digraph g;
    std::vector<std::vector<std::int64_t>> costs;
};

struct Solution {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    std::int64_t cost = 0;
    std::vector<int> mapping;  // set iff Optimal

    bool optimal() const { return status == Status::Optimal; }
};

/// Signals that a supposedly Min-Max template ordering lacks the interval /
/// monotone neighbor structure; always an internal invariant breach.
class StaircaseViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arc-consistent candidate lists, one per instance vertex, values in class
/// order. Empty optional = wipeout.
std::optional<std::vector<std::vector<int>>> prune_lists(
    const Digraph& instance, const Digraph& templ, int k,
    const std::vector<int>& instance_levels,
    const std::vector<std::vector<int>>& template_orders, int offset);

struct Staircase {
    std::vector<int> lo;  // 0-based indices into the neighboring list
    std::vector<int> hi;
};
/// Neighbor intervals of each candidate of list_u inside list_w under the
/// template arcs; throws StaircaseViolation if a row is not a full interval
/// or lo/hi fail monotonicity.
Staircase staircase(const std::vector<int>& list_u,
                    const std::vector<int>& list_w, const Digraph& templ);

/// Min-cut solve of one (instance component, template component, offset)
/// subproblem over pruned lists. mapping[u] is an index into lists[u].
std::optional<std::pair<std::int64_t, std::vector<int>>> solve_component(
    const Digraph& instance, const Digraph& templ,
    const std::vector<std::vector<int>>& lists,
    const std::vector<std::vector<std::int64_t>>& costs);

/// Exact MinHOM for a Polynomial template classification.
Solution solve_polynomial(const Digraph& h, const Classification& cls,
                          const CostInstance& inst);

/// Exhaustive oracle; guard bounds |V(H)|^|V(G)|.
Solution solve_bruteforce(const Digraph& h, const CostInstance& inst,
                          std::int64_t guard = 10'000'000);

/// Post-hoc check used by tests and the solvers' own assertions.
bool is_homomorphism(const Digraph& g, const Digraph& h,
                     const std::vector<int>& mapping);

}  // namespace minmaxhom

#endif
