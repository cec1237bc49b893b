#include "roman/generator.hpp"

#include <stdexcept>
#include <string>

namespace roman {

ConvexBipartiteGraph generate(const GenConfig& cfg) {
    if (cfg.m < 1 || cfg.n < 1) throw std::invalid_argument("generator requires m, n >= 1");
    if (cfg.p_isolated < 0.0 || cfg.p_isolated > 1.0)
        throw std::invalid_argument("p_isolated must be in [0,1]");
    if (!(cfg.span_bias > 0.0) || cfg.span_bias > 1.0)
        throw std::invalid_argument("span_bias must be in (0,1]");

    SplitMix64 rng(cfg.seed);
    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>(cfg.n));
    for (int j = 0; j < cfg.n; ++j) {
        if (rng.next_u01() < cfg.p_isolated) {
            intervals.push_back({0, 0});
            continue;
        }
        const int lo = rng.next_int(1, cfg.m);
        int width = 1;
        while (lo + width - 1 < cfg.m && rng.next_u01() >= cfg.span_bias) ++width;
        intervals.push_back({lo, lo + width - 1});
    }
    auto [g, perm] = ConvexBipartiteGraph::from_intervals(cfg.m, cfg.n, std::move(intervals)).normalized();
    return g;
}

}  // namespace roman
