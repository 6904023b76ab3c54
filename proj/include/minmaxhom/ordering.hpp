#ifndef MINMAXHOM_ORDERING_HPP
#define MINMAXHOM_ORDERING_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minmaxhom/pair_graph.hpp"

namespace minmaxhom {

/// A k-Min-Max ordering: one linear order per level class. k=1 is the plain
/// Min-Max ordering.
struct KMinMaxOrdering {
    int k = 1;
    LevelAssignment levels;
    std::vector<std::vector<int>> orders;  // orders[i] lists class i, ascending in <
};

/// Cyclic sequence of pairs (a0,a1),(a1,a2),...,(ap,a0) inside one weak
/// component of the pair graph; the obstruction to a (k-)Min-Max ordering.
struct CircularChain {
    std::vector<Arc> pairs;
    int component_id = -1;
};

/// Treats the pair set as a digraph on the base vertices and reports the first
/// directed cycle found by depth-first search in ascending vertex order.
std::optional<std::vector<int>> circular_chain_in(int n,
                                                  const std::vector<Arc>& pairs);

struct AdmitsResult {
    bool yes = false;
    CircularChain certificate;  // set iff !yes
};
AdmitsResult admits_ordering(const PairGraph& pg);

class InternalInvariantViolation : public std::logic_error {
public:
    InternalInvariantViolation(std::string msg, CircularChain first,
                               CircularChain second)
        : std::logic_error(std::move(msg)), chain_from_component(std::move(first)),
          chain_from_dual(std::move(second)) {}
    CircularChain chain_from_component;
    CircularChain chain_from_dual;
};

/// Greedy synthesis; requires admits_ordering(pg).yes. The optional trace
/// records the height of each processed component, in processing order.
KMinMaxOrdering synthesize_ordering(const Digraph& h, const PairGraph& pg,
                                    std::vector<Height>* trace = nullptr);

struct VerifyResult {
    bool ok = true;
    // set iff !ok:
    int i = -1, j = -1, s = -1, r = -1;
    Arc missing{-1, -1};
    std::string structural_error;  // non-empty for structural failures
};
VerifyResult verify_ordering(const Digraph& h, const KMinMaxOrdering& ord);

/// True iff all chain pairs are pair vertices of one weak component and the
/// cyclic chaining invariant holds.
bool check_certificate(const PairGraph& pg, const CircularChain& chain);

}  // namespace minmaxhom

#endif
