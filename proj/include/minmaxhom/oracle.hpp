#ifndef MINMAXHOM_ORACLE_HPP
#define MINMAXHOM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "minmaxhom/ordering.hpp"
#include "minmaxhom/solver.hpp"

namespace minmaxhom {

/// Exhaustive search over joint per-class permutations; returns the
/// lexicographically first ordering passing verify_ordering, or nothing.
/// The guard bounds the product of class factorials.
std::optional<KMinMaxOrdering> oracle_ordering(
    const Digraph& h, int k, const LevelAssignment& levels,
    std::int64_t guard = 10'000'000);

struct InducedCycle {
    std::vector<int> vertices;  // in traversal order
    int net_length = 0;         // direction-normalized, non-negative
};

/// Enumerates vertex subsets (up to max_len) inducing a single oriented
/// cycle. A loop counts as a cycle of length one and net length one.
/// The guard bounds the number of subsets visited.
std::vector<InducedCycle> oracle_induced_cycles(
    const Digraph& h, int max_len, std::int64_t guard = 1 << 20);

}  // namespace minmaxhom

#endif
