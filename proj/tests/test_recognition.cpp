#include <doctest.h>

#include "extremal/connectivity.hpp"
#include "extremal/dicolouring.hpp"
#include "extremal/recognition.hpp"
#include "helpers.hpp"

using namespace extremal;
using extremal::testing::random_digraph;

TEST_SUITE("recognition") {

TEST_CASE("oracle on the base families") {
    for (int k : {3, 4, 5}) CHECK(is_k_extremal_oracle(bidirected_complete(k + 1), k));
    for (int l : {1, 2, 3}) CHECK(is_k_extremal_oracle(symmetric_odd_wheel(l), 3));
    for (int n = 3; n <= 8; ++n) CHECK(is_k_extremal_oracle(directed_cycle(n), 1));
    for (int l : {1, 2, 3}) CHECK(is_k_extremal_oracle(symmetric_cycle(2 * l + 1), 2));

    CHECK(!is_k_extremal_oracle(symmetric_cycle(4), 2));
    CHECK(!is_k_extremal_oracle(bidirected_complete(4), 4));
    CHECK_THROWS_AS(is_k_extremal_oracle(bidirected_complete(19), 18), Error); // guard
}

TEST_CASE("directed split inverts the directed join") {
    auto j = directed_hajos_join(bidirected_complete(4), 0, 1, bidirected_complete(4), 2, 3);
    auto s = find_directed_split(j.d);
    REQUIRE(s);
    CHECK(j.d.has_arc(s->u, s->w));
    CHECK(is_bidirected_complete(s->d1));
    CHECK(is_bidirected_complete(s->d2));
    CHECK(!find_directed_split(bidirected_complete(5)));
}

TEST_CASE("parallel split inverts the parallel join") {
    std::vector<Arc> arcs;
    auto add_clique = [&](std::vector<int> vs) {
        for (int i : vs)
            for (int j : vs)
                if (i != j) arcs.emplace_back(i, j);
    };
    add_clique({0, 1, 2, 6});
    add_clique({3, 4, 5, 6});
    arcs.emplace_back(0, 3);
    arcs.emplace_back(4, 1);
    auto d_ac = Digraph::build(7, arcs);
    auto joined = parallel_hajos_join(d_ac, 6, 0, 3, 4, 1, bidirected_complete(4), 0, 1);
    auto s = find_parallel_split(joined.d);
    REQUIRE(s);
    CHECK(joined.d.has_arc(s->t, s->u));
    CHECK(joined.d.has_arc(s->v, s->w));
    CHECK(!joined.d.adjacent(s->a, s->b));
    // The spliced piece got its digon [a, b] back.
    int la = -1, lb = -1;
    for (int p = 0; p < s->d_b.order(); ++p) {
        if (s->b_map[p] == s->a) la = p;
        if (s->b_map[p] == s->b) lb = p;
    }
    REQUIRE(la >= 0);
    REQUIRE(lb >= 0);
    CHECK(s->d_b.has_digon(la, lb));
    CHECK(!find_parallel_split(bidirected_complete(5)));
}

TEST_CASE("star split inverts a generated star join") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto gen = random_member(3, 1, seed);
        if (gen.certificate->kind != Certificate::Kind::StarJoin) continue;
        auto s = find_star_split(gen.d);
        REQUIRE(s);
        CHECK(s->pieces.size() == s->cycle.size());
        for (std::size_t i = 0; i < s->pieces.size(); ++i)
            CHECK(s->pieces[i].has_digon(s->piece_uv[i].first, s->piece_uv[i].second));
        return;
    }
    FAIL("no star join drawn in 30 seeds");
}

TEST_CASE("recognizer accepts exactly the members") {
    CHECK(recognize_extremal(bidirected_complete(4), 3));
    CHECK(recognize_extremal(bidirected_complete(6), 5));
    CHECK(recognize_extremal(symmetric_odd_wheel(3), 3));
    CHECK(!recognize_extremal(symmetric_cycle(4), 3));
    CHECK(!recognize_extremal(directed_cycle(5), 3));
    CHECK(!recognize_extremal(bidirected_complete(5), 3)); // wrong k
    CHECK_THROWS_AS(recognize_extremal(bidirected_complete(4), 2), Error); // BadK

    auto j = directed_hajos_join(symmetric_odd_wheel(1), 0, 1, bidirected_complete(4), 2, 3);
    auto cert = recognize_extremal(j.d, 3);
    REQUIRE(cert);
    CHECK(certifies(*cert, j.d));
}

TEST_CASE("recognizer matches the oracle on perturbed members") {
    std::mt19937_64 rng(31);
    int agree = 0;
    while (agree < 40) {
        auto gen = random_member(3, 1 + static_cast<int>(rng() % 2), rng());
        auto d = gen.d;
        // one random arc/digon perturbation
        int u = static_cast<int>(rng() % d.order());
        int v = static_cast<int>(rng() % d.order());
        if (u == v) continue;
        switch (rng() % 4) {
        case 0: if (d.has_arc(u, v)) continue; d = d.with_arc(u, v); break;
        case 1: if (!d.has_arc(u, v)) continue; d = d.without_arc(u, v); break;
        case 2: if (d.adjacent(u, v)) continue; d = d.with_digon(u, v); break;
        default: if (!d.has_digon(u, v)) continue; d = d.without_digon(u, v); break;
        }
        if (!is_strong(d) || !is_biconnected(d)) continue;
        auto cert = recognize_extremal(d, 3);
        CHECK(static_cast<bool>(cert) == is_k_extremal_oracle(d, 3));
        if (cert) CHECK(certifies(*cert, d));
        ++agree;
    }
}

TEST_CASE("timeout surfaces as an error") {
    auto gen = random_member(3, 3, 77);
    auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(recognize_extremal(gen.d, 3, past), Error);
}

TEST_CASE("chi_equals_lambda_plus_one across block structures") {
    auto v1 = chi_equals_lambda_plus_one(directed_cycle(6));
    CHECK(v1.satisfied);
    CHECK(v1.k == 1);
    REQUIRE(v1.certificate);
    CHECK(certifies(*v1.certificate, directed_cycle(6)));

    CHECK(chi_equals_lambda_plus_one(bidirected_complete(4)).satisfied);
    CHECK(chi_equals_lambda_plus_one(symmetric_cycle(5)).satisfied);
    CHECK(!chi_equals_lambda_plus_one(symmetric_cycle(6)).satisfied);
    CHECK_THROWS_AS(chi_equals_lambda_plus_one(Digraph::build(0, {})), Error);
    CHECK(!chi_equals_lambda_plus_one(Digraph::build(3, {{0, 1}})).satisfied);

    // Two extremal blocks glued at a cutvertex still satisfy the equality.
    auto two_blocks = Digraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto v2 = chi_equals_lambda_plus_one(two_blocks);
    CHECK(v2.satisfied);
    CHECK(v2.k == 1);
}

TEST_CASE("verdict equals the direct comparison on random digraphs") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 80) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto d = random_digraph(rng, n, 0.4);
        if (d.size() == 0) continue;
        auto v = chi_equals_lambda_plus_one(d);
        CHECK(v.satisfied == (dichromatic_number(d) == lambda_max(d) + 1));
        ++done;
    }
}

} // TEST_SUITE
