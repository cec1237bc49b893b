#pragma once

#include <cstdint>

#include "roman/graph.hpp"

namespace roman {

// splitmix64. The exact constants are part of the contract: identical
// seeds must reproduce identical instances on every platform, so platform
// default randomness is never used anywhere in this project.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double next_u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi] via modulo reduction (bias negligible at the
    // ranges used here, and the rule is part of the pinned contract).
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

struct GenConfig {
    int m = 1;
    int n = 1;
    std::uint64_t seed = 0;
    double p_isolated = 0.1;   // probability a Y vertex is isolated
    double span_bias = 0.5;    // geometric stop probability; higher = narrower intervals
};

// Deterministic instance generation. Per Y vertex: isolated with
// probability p_isolated; otherwise lo uniform in [1,m] and width
// geometric(span_bias) truncated to fit. The result is normalized.
ConvexBipartiteGraph generate(const GenConfig& cfg);

}  // namespace roman
