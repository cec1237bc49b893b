#include <doctest.h>

#include <algorithm>

#include "roman/generator.hpp"
#include "roman/oracle.hpp"

using namespace roman;

TEST_CASE("oracle on tiny graphs") {
    // one isolated vertex
    auto iso = ConvexBipartiteGraph::from_intervals(1, {{0, 0}});
    CHECK(oracle_solve(iso).optimum == 2);  // x1 and y1 both isolated

    // star K_{1,3}: center x-side? place center on Y: y1 adjacent x1..x3
    auto star = ConvexBipartiteGraph::from_intervals(3, {{1, 3}});
    CHECK(oracle_solve(star).optimum == 2);

    // path on 4 vertices
    auto p4 = ConvexBipartiteGraph::from_intervals(2, {{1, 2}, {2, 2}});
    CHECK(oracle_solve(p4).optimum == 3);

    // single edge
    auto k11 = ConvexBipartiteGraph::from_intervals(1, {{1, 1}});
    const auto res = oracle_solve(k11);
    CHECK(res.optimum == 2);
    CHECK(res.witness.real_weight() == 2);
}

TEST_CASE("oracle witness is always a valid RDF of matching weight") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        GenConfig cfg{rng.next_int(1, 6), rng.next_int(1, 6), rng.next(), 0.2, 0.5};
        const auto g = generate(cfg);
        const auto res = oracle_solve(g);
        AugmentedGraph aug(g);
        CHECK(is_valid_rdf(GraphView(aug, g.m(), g.n()), res.witness));
        CHECK(res.witness.real_weight() == res.optimum);
    }
}

TEST_CASE("oracle caps") {
    std::vector<Interval> ivs(12, Interval{1, 1});
    auto big = ConvexBipartiteGraph::from_intervals(11, ivs);  // 23 vertices
    CHECK_THROWS_AS(oracle_solve(big), TooLarge);

    OracleOptions opts;
    opts.enumerate_all = true;
    auto thirteen = ConvexBipartiteGraph::from_intervals(7, std::vector<Interval>(ivs.begin(), ivs.begin() + 6));
    CHECK_THROWS_AS(oracle_solve(thirteen, opts), TooLarge);
}

TEST_CASE("subset formula agrees with full labeling enumeration") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = rng.next_int(1, 5);
        const int n = rng.next_int(1, 5);
        GenConfig cfg{m, n, rng.next(), 0.2, 0.5};
        const auto g = generate(cfg);
        CHECK(oracle_solve(g).optimum == oracle_optimum_by_enumeration(g, 12));
    }
}

TEST_CASE("oracle is invariant under Y reordering") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        GenConfig cfg{rng.next_int(1, 6), rng.next_int(2, 6), rng.next(), 0.2, 0.5};
        const auto g = generate(cfg);
        auto ivs = g.intervals();
        // rotate Y order; the result is generally unnormalized but the
        // oracle does not care
        std::rotate(ivs.begin(), ivs.begin() + 1, ivs.end());
        const auto h = ConvexBipartiteGraph::from_intervals(g.m(), std::move(ivs));
        CHECK(oracle_solve(g).optimum == oracle_solve(h).optimum);
    }
}

TEST_CASE("adding isolated vertices shifts the optimum by exactly their count") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        GenConfig cfg{rng.next_int(1, 6), rng.next_int(1, 6), rng.next(), 0.2, 0.5};
        const auto g = generate(cfg);
        const int base = oracle_solve(g).optimum;

        // one isolated Y vertex: +1
        auto ivs1 = g.intervals();
        ivs1.push_back({0, 0});
        CHECK(oracle_solve(ConvexBipartiteGraph::from_intervals(g.m(), std::move(ivs1))).optimum == base + 1);

        // sentinel pair (isolated x and isolated y): +2
        auto ivs2 = g.intervals();
        ivs2.push_back({0, 0});
        CHECK(oracle_solve(ConvexBipartiteGraph::from_intervals(g.m() + 1, std::move(ivs2))).optimum == base + 2);
    }
}

TEST_CASE("all-optima enumeration lists exactly the valid optimal labelings") {
    auto k11 = ConvexBipartiteGraph::from_intervals(1, {{1, 1}});
    OracleOptions opts;
    opts.enumerate_all = true;
    const auto res = oracle_solve(k11, opts);
    CHECK(res.optimum == 2);
    // weight-2 valid labelings of a single edge: (1,1), (2,0), (0,2)
    CHECK(res.all_optima_count == 3);
    CHECK_FALSE(res.all_optima_overflow);
    for (const auto& a : res.all_optima) CHECK(a.real_weight() == 2);
}

TEST_CASE("min_stab_bruteforce") {
    CHECK(min_stab_bruteforce({{1, 2}, {2, 3}}) == 1);
    CHECK(min_stab_bruteforce({{1, 1}, {2, 2}, {3, 3}}) == 3);
    CHECK(min_stab_bruteforce({{1, 2}, {2, 3}, {4, 5}}) == 2);
    CHECK_THROWS_AS(min_stab_bruteforce({{0, 0}}), EmptyInterval);
    std::vector<Interval> wide;
    for (int p = 1; p <= 13; ++p) wide.push_back({p, p});
    CHECK_THROWS_AS(min_stab_bruteforce(wide), TooLarge);
}

TEST_CASE("rds1_bruteforce") {
    CHECK(rds1_bruteforce({{ {0, 0} }}) == 1);            // one isolated member
    CHECK(rds1_bruteforce({{ {1, 1}, {1, 1} }}) == 2);    // shared cover vertex
    CHECK(rds1_bruteforce({{}}) == 0);                    // empty S1
    CHECK(rds1_bruteforce({{ {2, 2}, {2, 3}, {3, 3} }}) == 3);
}
