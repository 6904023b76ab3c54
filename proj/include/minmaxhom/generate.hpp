#ifndef MINMAXHOM_GENERATE_HPP
#define MINMAXHOM_GENERATE_HPP

#include <cstdint>

#include "minmaxhom/digraph.hpp"

namespace minmaxhom {

/// splitmix64; bit-exact across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) from the top 53 bits; no platform rounding.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct GeneratorSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    bool loops = false;
};

/// Ordered pairs scanned lexicographically, one draw each; arc kept iff the
/// draw is below p.
Digraph gen_random(const GeneratorSpec& spec);

/// Reflexive symmetric unit-interval intersection digraph; always classifies
/// Polynomial with k=1.
Digraph gen_proper_interval(int n, std::uint64_t seed);

}  // namespace minmaxhom

#endif
