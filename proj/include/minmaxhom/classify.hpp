#ifndef MINMAXHOM_CLASSIFY_HPP
#define MINMAXHOM_CLASSIFY_HPP

#include <string>
#include <vector>

#include "minmaxhom/ordering.hpp"

namespace minmaxhom {

/// Per weak component of the template: the modulus, levels and synthesized
/// ordering, all in original vertex ids. levels[i] belongs to vertices[i].
struct ComponentClassification {
    std::vector<int> vertices;  // sorted ascending, original ids
    int k = 1;
    std::vector<int> levels;                // parallel to vertices
    std::vector<std::vector<int>> orders;   // original ids
};

struct Classification {
    enum class Status { Polynomial, NPComplete };
    Status status = Status::Polynomial;

    // Polynomial:
    std::vector<ComponentClassification> components;

    // NPComplete:
    CircularChain certificate;           // pairs in original ids
    std::vector<int> certificate_component;  // vertex set of the bad component
    int certificate_k = 1;

    bool polynomial() const { return status == Status::Polynomial; }
};

/// The dichotomy: per weak component, k = cycle_gcd (1 when balanced), build
/// the level-restricted pair graph and test for circular chains.
Classification classify(const Digraph& h);

/// Deterministic human-readable report.
std::string explain(const Classification& c);

}  // namespace minmaxhom

#endif
