#pragma once

#include <cstdint>
#include <vector>

#include "roman/graph.hpp"
#include "roman/rdf.hpp"

namespace roman {

struct OracleOptions {
    int subset_cap = 22;             // max |V| for the 2^|V| subset scan
    int enumerate_cap = 12;          // max |V| for the 3^|V| all-optima scan
    std::size_t all_optima_cap = 1000000;
    bool enumerate_all = false;
};

struct OracleResult {
    int optimum = 0;                       // gamma_R of the raw graph (no sentinels)
    RomanAssignment witness;               // sentinel slots present, labeled 1
    long long all_optima_count = 0;        // only when enumerate_all
    bool all_optima_overflow = false;
    std::vector<RomanAssignment> all_optima;  // capped; only when enumerate_all
};

// Exact Roman domination number by exhaustive search. Ground truth:
// gamma_R(G) = min over vertex subsets S of 2|S| + |V \ N[S]|, which follows
// directly from the RDF definition (S is the 2-set; everything outside N[S]
// must take 1). Throws TooLarge beyond the caps.
OracleResult oracle_solve(const ConvexBipartiteGraph& g, const OracleOptions& opts = {});

// Same optimum via independent route: full 3^|V| labeling enumeration.
// Test-only cross-check of the oracle itself.
int oracle_optimum_by_enumeration(const ConvexBipartiteGraph& g, int cap = 12);

// Exact minimum stabbing-set size by subset enumeration over the distinct
// candidate stab points. Throws TooLarge beyond 12 points, EmptyInterval on
// a degenerate interval.
int min_stab_bruteforce(const std::vector<Interval>& intervals);

// A gap subgraph: S1 vertices with their X-index intervals into S2 (the
// union of the intervals). An empty interval is an isolated S1 vertex.
struct GapInstance {
    std::vector<Interval> s1_intervals;

    std::vector<int> s2_points() const;  // sorted distinct
};

// Minimum total Roman value over labelings of G[S1 u S2] in which every S1
// vertex is labeled >= 1 or adjacent to a 2. Full 3^|S1 u S2| enumeration;
// throws TooLarge beyond 12 vertices.
int rds1_bruteforce(const GapInstance& gap);

}  // namespace roman
