#include "roman/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace roman {

namespace {

void check_interval(const Interval& iv, int m, int j) {
    const bool isolated = iv.lo == 0 && iv.hi == 0;
    if (isolated) return;
    if (iv.lo == 0 || iv.hi == 0 || iv.lo > iv.hi || iv.hi > m || iv.lo < 0)
        throw IntervalOutOfRange("interval of y" + std::to_string(j) + " (" + std::to_string(iv.lo) + "," +
                                 std::to_string(iv.hi) + ") invalid for m=" + std::to_string(m));
}

}  // namespace

ConvexBipartiteGraph ConvexBipartiteGraph::from_intervals(int m, int n, std::vector<Interval> intervals) {
    if (m < 0) throw SizeMismatch("m must be nonnegative");
    if (static_cast<int>(intervals.size()) != n)
        throw SizeMismatch("declared n=" + std::to_string(n) + " but got " + std::to_string(intervals.size()) +
                           " intervals");
    for (int j = 1; j <= n; ++j) check_interval(intervals[j - 1], m, j);
    ConvexBipartiteGraph g;
    g.m_ = m;
    g.intervals_ = std::move(intervals);
    g.build_x_neighbors();
    return g;
}

ConvexBipartiteGraph ConvexBipartiteGraph::from_intervals(int m, std::vector<Interval> intervals) {
    const int n = static_cast<int>(intervals.size());
    return from_intervals(m, n, std::move(intervals));
}

ConvexBipartiteGraph ConvexBipartiteGraph::from_edge_list(int m, int n,
                                                          const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> y_adj(static_cast<std::size_t>(n) + 1);
    for (const auto& [i, j] : edges) {
        if (i < 1 || i > m || j < 1 || j > n)
            throw IndexOutOfRange("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        y_adj[j].push_back(i);
    }
    std::vector<Interval> intervals(n);
    for (int j = 1; j <= n; ++j) {
        auto& adj = y_adj[j];
        if (adj.empty()) continue;
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        for (std::size_t k = 1; k < adj.size(); ++k)
            if (adj[k] != adj[k - 1] + 1) throw NotConvex(j, adj[k - 1] + 1);
        intervals[j - 1] = Interval{adj.front(), adj.back()};
    }
    return from_intervals(m, n, std::move(intervals));
}

void ConvexBipartiteGraph::build_x_neighbors() {
    x_neighbors_.assign(m_, {});
    for (int j = 1; j <= n(); ++j) {
        const Interval& iv = intervals_[j - 1];
        for (int a = iv.lo; a != 0 && a <= iv.hi; ++a) x_neighbors_[a - 1].push_back(j);
    }
}

const Interval& ConvexBipartiteGraph::interval(int j) const {
    if (j < 1 || j > n()) throw IndexOutOfRange("y index " + std::to_string(j));
    return intervals_[j - 1];
}

bool ConvexBipartiteGraph::has_edge(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > n()) throw IndexOutOfRange("edge query (" + std::to_string(i) + "," +
                                                                   std::to_string(j) + ")");
    return intervals_[j - 1].contains(i);
}

const std::vector<int>& ConvexBipartiteGraph::x_neighbors(int i) const {
    if (i < 1 || i > m_) throw IndexOutOfRange("x index " + std::to_string(i));
    return x_neighbors_[i - 1];
}

std::size_t ConvexBipartiteGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& iv : intervals_) e += static_cast<std::size_t>(iv.length());
    return e;
}

bool ConvexBipartiteGraph::is_normalized() const {
    int last_h = 0;
    bool seen_non_isolated = false;
    for (const auto& iv : intervals_) {
        if (iv.empty()) {
            if (seen_non_isolated) return false;  // isolated vertices sort first
            continue;
        }
        seen_non_isolated = true;
        if (iv.hi < last_h) return false;
        last_h = iv.hi;
    }
    return true;
}

std::pair<ConvexBipartiteGraph, std::vector<int>> ConvexBipartiteGraph::normalized() const {
    std::vector<int> perm(n());
    std::iota(perm.begin(), perm.end(), 1);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return intervals_[a - 1].hi < intervals_[b - 1].hi; });
    std::vector<Interval> sorted(n());
    for (int jn = 0; jn < n(); ++jn) sorted[jn] = intervals_[perm[jn] - 1];
    return {from_intervals(m_, n(), std::move(sorted)), std::move(perm)};
}

Interval AugmentedGraph::neighbors_y(int j) const {
    if (j < 0 || j > n()) throw IndexOutOfRange("y index " + std::to_string(j));
    if (j == 0) return {};
    return base_.interval(j);
}

const std::vector<int>& AugmentedGraph::neighbors_x(int i) const {
    if (i < 0 || i > m()) throw IndexOutOfRange("x index " + std::to_string(i));
    if (i == 0) return empty_;
    return base_.x_neighbors(i);
}

GraphView::GraphView(const AugmentedGraph& g, int i, int j) : g_(&g), i_(i), j_(j) {
    if (i < 0 || i > g.m() || j < 0 || j > g.n())
        throw IndexOutOfRange("view (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

Interval GraphView::interval_y(int b) const {
    if (b < 0 || b > j_) throw IndexOutOfRange("view y index " + std::to_string(b));
    Interval iv = g_->neighbors_y(b);
    if (iv.empty() || iv.lo > i_) return {};
    return {iv.lo, std::min(iv.hi, i_)};
}

std::vector<int> GraphView::neighbors_x(int a) const {
    if (a < 0 || a > i_) throw IndexOutOfRange("view x index " + std::to_string(a));
    std::vector<int> out;
    for (int b : g_->neighbors_x(a)) {
        if (b > j_) break;
        out.push_back(b);
    }
    return out;
}

int GraphView::min_neighbor_x(int a) const {
    const auto& adj = g_->neighbors_x(a);
    if (adj.empty() || adj.front() > j_) return 0;
    return adj.front();
}

int GraphView::max_neighbor_x(int a) const {
    const auto& adj = g_->neighbors_x(a);
    int best = 0;
    for (int b : adj) {
        if (b > j_) break;
        best = b;
    }
    return best;
}

bool GraphView::has_edge(int a, int b) const {
    if (a < 0 || a > i_ || b < 0 || b > j_)
        throw IndexOutOfRange("view edge query (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return g_->has_edge(a, b);
}

std::vector<int> GraphView::gap_vertices_of_top_x() const {
    std::vector<int> gaps;
    if (i_ == 0) return gaps;
    const int lo = min_neighbor_x(i_);
    const int hi = max_neighbor_x(i_);
    if (lo == 0 || lo == hi) return gaps;
    for (int b = lo + 1; b < hi; ++b) {
        if (has_edge(i_, b)) continue;
        // Lemma guarantee: a non-neighbor between the extremes has no
        // neighbor at all inside this view.
        if (!is_isolated_y(b))
            throw InternalError("gap vertex y" + std::to_string(b) + " is not isolated in view (" +
                                std::to_string(i_) + "," + std::to_string(j_) + ")");
        gaps.push_back(b);
    }
    return gaps;
}

}  // namespace roman
