#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "roman/graph.hpp"
#include "roman/oracle.hpp"
#include "roman/rdf.hpp"

namespace roman {

// Sentinel for inapplicable recurrence cases; strictly greater than any
// achievable weight and never reconstructed into a labeling.
inline constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

enum class CaseTag : std::uint8_t {
    Base,   // row i=0 or column j=0
    A1_00,  // edge, (x_i, y_j) = (0, 0)
    A2_y1,  // edge, y_j = 1
    A3_02,  // edge, (0, 2)
    A4_x1,  // edge, x_i = 1
    A5_20,  // edge, (2, 0)
    A6_22,  // edge, (2, 2)
    B2_y1,  // no edge, y_j = 1
    B3_x1,  // no edge, x_i = 1
};

const char* to_string(CaseTag tag);

struct DpCell {
    int value = kInfinity;
    CaseTag tag = CaseTag::Base;
    RomanAssignment labeling;  // valid RDF on G[X_i, Y_j] with weight == value

    // Lookup tables over the stored labeling, built once per cell.
    // ones_prefix_x[a] = # of 1-labeled x_1..x_a.
    std::vector<int> ones_prefix_x;
    // ones_adjacent_y[a] = # of 1-labeled y_b (b <= t) adjacent to x_a,
    // for every a in [0, m] of the full graph.
    std::vector<int> ones_adjacent_y;
};

class DpTable {
public:
    DpTable(int m, int n) : m_(m), n_(n), cells_(static_cast<std::size_t>((m + 1) * (n + 1))) {}

    int m() const { return m_; }
    int n() const { return n_; }

    DpCell& at(int i, int j) { return cells_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
    const DpCell& at(int i, int j) const { return cells_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }

private:
    int m_;
    int n_;
    std::vector<DpCell> cells_;
};

struct SolveOptions {
    // Additionally tries r = i-1 in the (0,2) case, whose published upper
    // bound is r < i-1 while the (2,2) case allows f < i. Differential
    // probe only; off by default.
    bool relaxed_ranges = false;
};

struct SolveStats {
    long long candidates_discarded_invalid = 0;        // overlay failed RDF validity
    long long candidates_discarded_weight = 0;         // overlay weight != case formula
    long long lemma3_guard_hits = 0;                    // 1-extension won strictly over a (2,.)-shaped subcell
};

struct SolveResult {
    int rdn = 0;                 // R[m,n] - 2
    RomanAssignment witness;     // labeling of cell (m, n), sentinels included
    DpTable table;
    SolveStats stats;
};

// Fills the whole table in lexicographic order and returns R[m,n] - 2 with
// a witnessing labeling. Requires the graph in normal form (non-decreasing
// h over non-isolated Y). Every stored cell labeling is validated against
// its view; throws InvalidWitness if the final labeling fails.
SolveResult solve(const AugmentedGraph& g, const SolveOptions& opts = {});

// Greedy earliest-finish interval stabbing. Input intervals sorted by hi;
// returns the chosen stab points. The result size is the minimum possible.
// Throws EmptyInterval on a degenerate member.
std::vector<int> min_stab_greedy(const std::vector<Interval>& intervals_sorted_by_hi);

// Gap structure of an X vertex v inside a view: S1 are the Y vertices
// strictly between v's extreme neighbors that are not adjacent to v, with
// their X intervals clipped to the view and the excluded top vertex
// removed. S2 is the union of those intervals.
GapInstance gap_instance_for(const GraphView& view, int v, int excluded_x);

struct Rds1Result {
    int cost = 0;
    std::vector<PatchEntry> partial;  // labels for S1 members and chosen S2 points
};

// Minimum-cost Roman cover of S1 with respect to G[S1 u S2]: isolated S1
// vertices take 1; a set of S2 points takes 2 to dominate the intervals
// they stab; S1 vertices left unstabbed take 1. The selection is exact
// (ties prefer covering by 2s). cost is the sum of assigned labels.
Rds1Result rds1(const GraphView& view, int v, int excluded_x);

// Exact cover selection behind rds1, exposed for direct testing against
// rds1_bruteforce. Returns cost plus chosen points and per-member cover
// flags for non-isolated members.
struct GapCover {
    int cost = 0;
    std::vector<int> two_points;
    std::vector<bool> covered;  // parallel to the instance's non-empty intervals
};
GapCover min_gap_cover(const GapInstance& gap);

struct AssignR1Result {
    int cost = 0;              // == labeled.size()
    std::vector<int> labeled;  // gap vertices of the view's top x with index > w
};

// Gap vertices of x_i above the subproblem boundary w get Roman value 1;
// gaps at or below w already live inside the subproblem and are untouched.
AssignR1Result assign_r1(const GraphView& view, int w);

}  // namespace roman
