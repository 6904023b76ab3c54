#ifndef MINMAXHOM_DIGRAPH_HPP
#define MINMAXHOM_DIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minmaxhom {

using Arc = std::pair<int, int>;

/// Thrown by parse_digraph; carries the 1-based input line of the offense.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line)
        : std::runtime_error(std::move(msg)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Immutable digraph on dense vertex ids 0..n-1. Loops allowed, arc set is a
/// set (duplicates rejected at construction).
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const;
    bool has_loop(int v) const { return has_arc(v, v); }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;              // sorted lexicographically
    std::vector<std::vector<int>> out_;  // sorted
    std::vector<std::vector<int>> in_;   // sorted
};

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);

/// Canonical form: header line, then arc lines sorted lexicographically.
std::string serialize_digraph(const Digraph& d);

enum class Step : std::uint8_t { Forward, Backward };

/// A walk x0..xq with a direction per step. Step i is Forward when
/// (x_{i-1}, x_i) is an arc of the host, Backward when (x_i, x_{i-1}) is.
struct OrientedWalk {
    std::vector<int> vertices;  // q+1 entries, at least one
    std::vector<Step> steps;    // q entries

    int length() const { return static_cast<int>(steps.size()); }
    int net_length() const;
    /// Least net length over initial subwalks (including the empty one).
    int min_height() const;
    /// Greatest net length over initial subwalks.
    int max_height() const;
    bool valid_in(const Digraph& host) const;

    OrientedWalk reversed() const;
};

/// Parts ordered by smallest member, members sorted ascending.
std::vector<std::vector<int>> weak_components(const Digraph& d);

/// Subdigraph induced by `vertices` (sorted ascending), reindexed densely.
/// local_to_global[i] is the original id of local vertex i.
struct InducedSubdigraph {
    Digraph graph;
    std::vector<int> local_to_global;
};
InducedSubdigraph induced_subdigraph(const Digraph& d,
                                     const std::vector<int>& vertices);

/// Outcome of balance_labeling. Balanced components carry labels with
/// label(v) = label(u) + 1 on every internal arc, minimum label 0;
/// unbalanced ones carry a closed walk of non-zero net length.
struct BalanceResult {
    std::optional<std::vector<int>> labels;  // indexed by vertex id
    OrientedWalk witness;                    // set iff !balanced()
    bool balanced() const { return labels.has_value(); }
};
BalanceResult balance_labeling(const Digraph& d,
                               const std::vector<int>& vertices);

struct Height {
    bool infinite = false;
    int value = 0;  // meaningful iff !infinite

    static Height finite(int h) { return Height{false, h}; }
    static Height inf() { return Height{true, 0}; }
    friend bool operator==(const Height&, const Height&) = default;
};
/// Infinite exactly when the component is unbalanced.
Height height_of(const Digraph& d, const std::vector<int>& vertices);

/// gcd of net lengths of closed walks in the component; 0 when balanced.
int cycle_gcd(const Digraph& d, const std::vector<int>& vertices);

/// Homomorphism to the directed k-cycle, per vertex. Vertices outside the
/// covered set have level -1.
struct LevelAssignment {
    int k = 1;
    std::vector<int> levels;  // indexed by vertex id, -1 where uncovered
};

struct LevelResult {
    std::optional<LevelAssignment> assignment;
    Arc conflict{-1, -1};  // witness arc, set iff !ok()
    bool ok() const { return assignment.has_value(); }
};
/// Search rooted at the smallest vertex id of the set, which gets level 0.
LevelResult level_assignment(const Digraph& d, const std::vector<int>& vertices,
                             int k);

/// Level assignment over all of d, each weak component rooted independently.
/// Fails with the witness arc of the first failing component.
LevelResult level_assignment_all(const Digraph& d, int k);

}  // namespace minmaxhom

#endif
