#include <doctest.h>

#include "extremal/constructions.hpp"
#include "extremal/dicolouring.hpp"
#include "extremal/hypergraph.hpp"
#include "helpers.hpp"

using namespace extremal;
using extremal::testing::random_digraph;

TEST_SUITE("hypergraph") {

TEST_CASE("build validates") {
    CHECK_THROWS_AS(Hypergraph::build(3, {{0}}), Error);
    CHECK_THROWS_AS(Hypergraph::build(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Hypergraph::build(3, {{0, 1}, {1, 0}}), Error); // duplicate edge
    auto h = Hypergraph::build(4, {{2, 0}, {1, 3, 0}});
    CHECK(h.edges()[0] == std::vector<int>{0, 1, 3}); // sorted both ways
    CHECK(h.edges()[1] == std::vector<int>{0, 2});
}

TEST_CASE("dicycle hypergraphs of the base digraphs") {
    auto hc = dicycle_hypergraph(directed_cycle(3));
    CHECK(hc.edges() == std::vector<std::vector<int>>{{0, 1, 2}});

    auto hk = dicycle_hypergraph(bidirected_complete(3));
    CHECK(hk.edges() == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

    auto h5 = dicycle_hypergraph(symmetric_cycle(5));
    CHECK(h5.size() == 5); // the five digons
    CHECK(hyper_chromatic_number(h5) == 3);

    CHECK_THROWS_AS(dicycle_hypergraph(bidirected_complete(15)), Error); // guard
}

TEST_CASE("hypergraph chromatic number") {
    CHECK(hyper_chromatic_number(Hypergraph::build(3, {})) == 1);
    CHECK(hyper_chromatic_number(Hypergraph::build(3, {{0, 1, 2}})) == 2);
    CHECK(hyper_chromatic_number(dicycle_hypergraph(bidirected_complete(4))) == 4);
}

TEST_CASE("dichromatic number equals the hypergraph chromatic number") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto d = random_digraph(rng, n, 0.35);
        CHECK(dichromatic_number(d) == hyper_chromatic_number(dicycle_hypergraph(d)));
    }
}

TEST_CASE("hyperpath connectivity: flow matches exhaustive packing") {
    auto h = Hypergraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 1, 2, 3}});
    CHECK(hyper_lambda(h, 0, 2) == hyper_lambda_exhaustive(h, 0, 2));
    CHECK(hyper_lambda(h, 0, 2) == 3);
    CHECK(hyper_lambda(h, 0, 1) == 3); // direct edge + via 3 + the big edge
    CHECK(hyper_lambda(Hypergraph::build(3, {{0, 1}}), 0, 2) == 0);
    CHECK_THROWS_AS(hyper_lambda(h, 1, 1), Error);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto d = random_digraph(rng, n, 0.3);
        auto hd = dicycle_hypergraph(d);
        if (hd.size() > 8 || hd.size() == 0) continue;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK(hyper_lambda(hd, u, v) == hyper_lambda_exhaustive(hd, u, v));
    }
}

TEST_CASE("pairwise intersection") {
    CHECK(pairwise_intersection_check(dicycle_hypergraph(bidirected_complete(3))));
    CHECK(!pairwise_intersection_check(Hypergraph::build(4, {{0, 1, 2}, {1, 2, 3}})));
}

TEST_CASE("hyperjoin merges one edge from each operand") {
    auto h1 = Hypergraph::build(3, {{0, 1, 2}});
    auto h2 = Hypergraph::build(3, {{0, 1, 2}});
    auto j = hajos_hyperjoin(h1, {0, 1, 2}, 0, h2, {0, 1, 2}, 0, false);
    CHECK(j.order() == 5);
    REQUIRE(j.size() == 1);
    CHECK(j.edges()[0].size() == 4); // both edges minus the merged vertex

    auto ji = hajos_hyperjoin(h1, {0, 1, 2}, 0, h2, {0, 1, 2}, 0, true);
    CHECK(ji.edges()[0].size() == 5);

    CHECK_THROWS_AS(hajos_hyperjoin(h1, {0, 1}, 0, h2, {0, 1, 2}, 0, false), Error);
    CHECK_THROWS_AS(hajos_hyperjoin(h1, {0, 1, 2}, 3, h2, {0, 1, 2}, 0, false), Error);
}

} // TEST_SUITE
