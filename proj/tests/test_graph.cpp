#include <doctest.h>

#include <algorithm>
#include <set>

#include "roman/generator.hpp"
#include "roman/graph.hpp"

using namespace roman;

namespace {

ConvexBipartiteGraph make(int m, std::vector<Interval> ivs) {
    return ConvexBipartiteGraph::from_intervals(m, std::move(ivs));
}

}  // namespace

TEST_CASE("from_intervals builds adjacency from intervals") {
    auto star = make(3, {{1, 3}});
    CHECK(star.m() == 3);
    CHECK(star.n() == 1);
    CHECK(star.has_edge(1, 1));
    CHECK(star.has_edge(2, 1));
    CHECK(star.has_edge(3, 1));

    auto isolated = make(2, {{0, 0}});
    CHECK(isolated.edge_count() == 0);

    auto chain = make(2, {{1, 1}, {1, 2}, {2, 2}});
    CHECK(chain.has_edge(1, 1));
    CHECK(chain.has_edge(1, 2));
    CHECK_FALSE(chain.has_edge(2, 1));
    CHECK(chain.has_edge(2, 2));
    CHECK(chain.has_edge(2, 3));
    CHECK_FALSE(chain.has_edge(1, 3));
}

TEST_CASE("from_intervals rejects bad input") {
    CHECK_THROWS_AS(make(2, {{3, 3}}), IntervalOutOfRange);
    CHECK_THROWS_AS(make(3, {{2, 1}}), IntervalOutOfRange);
    CHECK_THROWS_AS(make(3, {{0, 2}}), IntervalOutOfRange);
    CHECK_THROWS_AS(ConvexBipartiteGraph::from_intervals(3, 2, {{1, 1}}), SizeMismatch);
}

TEST_CASE("from_edge_list accepts convex neighborhoods and reports holes") {
    auto g = ConvexBipartiteGraph::from_edge_list(3, 1, {{1, 1}, {2, 1}, {3, 1}});
    CHECK(g.interval(1) == Interval{1, 3});

    try {
        ConvexBipartiteGraph::from_edge_list(3, 1, {{1, 1}, {3, 1}});
        FAIL("expected NotConvex");
    } catch (const NotConvex& e) {
        CHECK(e.y == 1);
        CHECK(e.gap_x == 2);
    }

    auto empty = ConvexBipartiteGraph::from_edge_list(2, 1, {});
    CHECK(empty.interval(1).empty());
}

TEST_CASE("normalize sorts by h with isolated vertices first") {
    auto g = make(3, {{1, 3}, {2, 2}, {1, 1}});
    auto [norm, perm] = g.normalized();
    CHECK(perm == std::vector<int>{3, 2, 1});
    CHECK(norm.interval(1) == Interval{1, 1});
    CHECK(norm.interval(2) == Interval{2, 2});
    CHECK(norm.interval(3) == Interval{1, 3});
    CHECK(norm.is_normalized());

    auto sorted = make(2, {{1, 1}, {1, 2}});
    auto [same, id_perm] = sorted.normalized();
    CHECK(same == sorted);
    CHECK(id_perm == std::vector<int>{1, 2});

    auto iso = make(2, {{2, 2}, {0, 0}});
    auto [iso_norm, iso_perm] = iso.normalized();
    CHECK(iso_norm.interval(1).empty());
    CHECK(iso_norm.interval(2) == Interval{2, 2});
    CHECK(iso_perm == std::vector<int>{2, 1});
}

TEST_CASE("normalize is idempotent and preserves the interval multiset") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = rng.next_int(1, 8);
        const int n = rng.next_int(1, 8);
        std::vector<Interval> ivs;
        for (int j = 0; j < n; ++j) {
            if (rng.next_u01() < 0.2) {
                ivs.push_back({0, 0});
            } else {
                int lo = rng.next_int(1, m);
                int hi = rng.next_int(lo, m);
                ivs.push_back({lo, hi});
            }
        }
        auto g = make(m, ivs);
        auto [norm, perm] = g.normalized();
        CHECK(norm.is_normalized());
        auto [again, perm2] = norm.normalized();
        CHECK(again == norm);

        auto key = [](const Interval& a, const Interval& b) { return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi); };
        auto ms1 = g.intervals();
        auto ms2 = norm.intervals();
        std::sort(ms1.begin(), ms1.end(), key);
        std::sort(ms2.begin(), ms2.end(), key);
        CHECK(ms1 == ms2);

        // perm maps new index -> old index and is a bijection
        std::set<int> seen(perm.begin(), perm.end());
        CHECK(static_cast<int>(seen.size()) == n);
        for (int jn = 1; jn <= n; ++jn) CHECK(norm.interval(jn) == g.interval(perm[jn - 1]));
    }
}

TEST_CASE("sentinel neighborhoods are empty") {
    AugmentedGraph g(make(2, {{1, 2}, {2, 2}}));
    CHECK(g.neighbors_y(0).empty());
    CHECK(g.neighbors_x(0).empty());
    CHECK(g.neighbors_x(2) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(g.neighbors_x(3), IndexOutOfRange);
    CHECK_THROWS_AS(g.neighbors_y(-1), IndexOutOfRange);
}

TEST_CASE("neighbors_x can be non-contiguous") {
    AugmentedGraph g(make(3, {{1, 1}, {1, 3}}));
    CHECK(g.neighbors_x(2) == std::vector<int>{2});
}

TEST_CASE("induced restriction clips intervals") {
    AugmentedGraph g(make(3, {{1, 3}}));
    GraphView v21(g, 2, 1);
    CHECK(v21.interval_y(1) == Interval{1, 2});

    GraphView v00(g, 0, 0);
    CHECK(v00.interval_y(0).empty());

    AugmentedGraph h(make(3, {{2, 3}}));
    GraphView v11(h, 1, 1);
    CHECK(v11.is_isolated_y(1));

    CHECK_THROWS_AS(GraphView(g, 4, 1), IndexOutOfRange);
    CHECK_THROWS_AS(v21.interval_y(2), IndexOutOfRange);
}

TEST_CASE("gap vertices of the top x vertex") {
    // N(x_2) = {y_1, y_3}, y_2 isolated in the view
    AugmentedGraph g(make(2, {{1, 2}, {0, 0}, {2, 2}}));
    GraphView v(g, 2, 3);
    CHECK(v.gap_vertices_of_top_x() == std::vector<int>{2});

    AugmentedGraph contiguous(make(2, {{1, 2}, {2, 2}}));
    CHECK(GraphView(contiguous, 2, 2).gap_vertices_of_top_x().empty());

    AugmentedGraph singleton(make(2, {{2, 2}}));
    CHECK(GraphView(singleton, 2, 1).gap_vertices_of_top_x().empty());
}

TEST_CASE("every gap vertex in every view of random instances is isolated") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        GenConfig cfg;
        cfg.m = rng.next_int(1, 7);
        cfg.n = rng.next_int(1, 7);
        cfg.seed = rng.next();
        cfg.p_isolated = 0.2;
        cfg.span_bias = 0.6;
        AugmentedGraph g(generate(cfg));
        for (int i = 0; i <= g.m(); ++i)
            for (int j = 0; j <= g.n(); ++j)
                CHECK_NOTHROW(GraphView(g, i, j).gap_vertices_of_top_x());
    }
}

TEST_CASE("column convexity holds in every view") {
    SplitMix64 rng(88);
    for (int trial = 0; trial < 50; ++trial) {
        GenConfig cfg{rng.next_int(1, 6), rng.next_int(1, 6), rng.next(), 0.15, 0.5};
        AugmentedGraph g(generate(cfg));
        GraphView full(g, g.m(), g.n());
        for (int b = 1; b <= g.n(); ++b) {
            int runs = 0;
            bool in_run = false;
            for (int a = 1; a <= g.m(); ++a) {
                const bool e = full.has_edge(a, b);
                if (e && !in_run) ++runs;
                in_run = e;
            }
            CHECK(runs <= 1);
        }
    }
}
