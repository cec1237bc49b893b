#pragma once

#include <utility>
#include <vector>

#include "roman/errors.hpp"

namespace roman {

// Contiguous 1-based X index range of a Y vertex's neighborhood.
// lo == hi == 0 encodes an isolated Y vertex.
struct Interval {
    int lo = 0;
    int hi = 0;

    bool empty() const { return lo == 0; }
    bool contains(int a) const { return lo != 0 && lo <= a && a <= hi; }
    int length() const { return empty() ? 0 : hi - lo + 1; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Bipartite graph over X = {x_1..x_m}, Y = {y_1..y_n}, convex with respect
// to Y: every Y vertex's neighborhood is an interval of X indices. The
// adjacency matrix B is derived from the intervals (B[i][j] iff
// intervals[j] contains i). Immutable after construction.
class ConvexBipartiteGraph {
public:
    ConvexBipartiteGraph() = default;

    // Throws IntervalOutOfRange if any interval violates its invariants
    // against m, SizeMismatch if intervals.size() != n.
    static ConvexBipartiteGraph from_intervals(int m, int n, std::vector<Interval> intervals);
    static ConvexBipartiteGraph from_intervals(int m, std::vector<Interval> intervals);

    // Succeeds only if every Y neighborhood is contiguous in the given X
    // order; throws NotConvex(j, gap_index) otherwise.
    static ConvexBipartiteGraph from_edge_list(int m, int n, const std::vector<std::pair<int, int>>& edges);

    int m() const { return m_; }
    int n() const { return static_cast<int>(intervals_.size()); }

    const Interval& interval(int j) const;  // 1-based
    const std::vector<Interval>& intervals() const { return intervals_; }

    bool has_edge(int i, int j) const;  // B[i][j], 1-based

    // Sorted Y indices adjacent to x_i (possibly non-contiguous).
    const std::vector<int>& x_neighbors(int i) const;

    int degree_x(int i) const { return static_cast<int>(x_neighbors(i).size()); }
    int degree_y(int j) const { return interval(j).length(); }

    std::size_t edge_count() const;

    // True iff non-isolated h(y_j) values are non-decreasing and isolated
    // Y vertices come first.
    bool is_normalized() const;

    // Stable sort of Y by ascending h (isolated vertices, h = 0, first).
    // Returns the permutation mapping new index -> old index (1-based).
    std::pair<ConvexBipartiteGraph, std::vector<int>> normalized() const;

    friend bool operator==(const ConvexBipartiteGraph& a, const ConvexBipartiteGraph& b) {
        return a.m_ == b.m_ && a.intervals_ == b.intervals_;
    }

private:
    int m_ = 0;
    std::vector<Interval> intervals_;            // index j-1 -> I(y_j)
    std::vector<std::vector<int>> x_neighbors_;  // index i-1 -> sorted Y indices

    void build_x_neighbors();
};

// The graph augmented with sentinel isolated vertices x_0 and y_0. Index 0
// on either side is always valid and always has an empty neighborhood.
class AugmentedGraph {
public:
    explicit AugmentedGraph(ConvexBipartiteGraph base) : base_(std::move(base)) {}

    const ConvexBipartiteGraph& base() const { return base_; }
    int m() const { return base_.m(); }
    int n() const { return base_.n(); }

    // Neighborhood of y_j as an X interval; empty for j == 0.
    Interval neighbors_y(int j) const;
    // Y indices adjacent to x_i; empty for i == 0.
    const std::vector<int>& neighbors_x(int i) const;

    bool has_edge(int i, int j) const { return i >= 1 && j >= 1 && base_.has_edge(i, j); }

private:
    ConvexBipartiteGraph base_;
    std::vector<int> empty_{};
};

// Lazy view of the induced subgraph G[X_i, Y_j] (vertices x_0..x_i and
// y_0..y_j). Neighborhood queries clip intervals to [1, i] and filter
// x-neighbor lists to [1, j]; nothing is copied.
class GraphView {
public:
    GraphView(const AugmentedGraph& g, int i, int j);

    int top_i() const { return i_; }
    int top_j() const { return j_; }
    const AugmentedGraph& graph() const { return *g_; }

    // Clipped interval of y_b within the view (empty if fully clipped).
    Interval interval_y(int b) const;
    bool is_isolated_y(int b) const { return interval_y(b).empty(); }

    // Y indices <= j adjacent to x_a.
    std::vector<int> neighbors_x(int a) const;
    int min_neighbor_x(int a) const;  // 0 if none
    int max_neighbor_x(int a) const;  // 0 if none

    bool has_edge(int a, int b) const;

    // Y indices strictly between the extreme neighbors of the view's top
    // X vertex x_i that are not adjacent to it. Lemma: every such vertex
    // is isolated in this view; a violation throws InternalError since it
    // can only come from a broken graph construction.
    std::vector<int> gap_vertices_of_top_x() const;

private:
    const AugmentedGraph* g_;
    int i_;
    int j_;
};

}  // namespace roman
