#include <doctest.h>

#include "extremal/connectivity.hpp"
#include "extremal/constructions.hpp"
#include "extremal/dicolouring.hpp"
#include "extremal/recognition.hpp"

using namespace extremal;

namespace {

EmbeddedTree path_tree(int n) {
    EmbeddedTree t;
    t.n = n;
    t.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
        if (v > 0) t.rotation[v].push_back(v - 1);
        if (v + 1 < n) t.rotation[v].push_back(v + 1);
    }
    return t;
}

TreeJoinSpec path_spec_k4(int edges) {
    TreeJoinSpec spec;
    spec.tree = path_tree(edges + 1);
    for (int i = 0; i < edges; ++i) {
        spec.edges.emplace_back(i, i + 1);
        spec.pieces.push_back({bidirected_complete(4), 0, 1});
    }
    spec.peripheral = {0, edges};
    return spec;
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("base families") {
    CHECK(bidirected_complete(5).size() == 20);
    CHECK(directed_cycle(4).size() == 4);
    CHECK(symmetric_cycle(5).size() == 10);
    auto w = symmetric_odd_wheel(2);
    CHECK(w.order() == 6);
    CHECK(w.size() == 20); // 2*5 rim + 2*5 spokes

    CHECK(base(BaseKind::Complete, 4) == bidirected_complete(4));
    CHECK_THROWS_AS(base(BaseKind::Complete, 3), Error);
    CHECK_THROWS_AS(base(BaseKind::OddWheel, 0), Error);
    CHECK_THROWS_AS(base(BaseKind::DirectedCycle, 1), Error);
    CHECK_THROWS_AS(base(BaseKind::SymmetricOddCycle, 0), Error);
    CHECK_THROWS_AS(symmetric_cycle(2), Error);
}

TEST_CASE("directed join") {
    auto k4 = bidirected_complete(4);
    auto j = directed_hajos_join(k4, 0, 1, k4, 2, 3);
    CHECK(j.d.order() == 7);
    CHECK(j.d.size() == 2 * 12 - 2 + 1);
    CHECK(j.map1 == std::vector<int>{0, 1, 2, 3});
    CHECK(j.map2[2] == 1); // v2 merged onto v1
    CHECK(!j.d.has_arc(0, 1));
    CHECK(j.d.has_arc(1, 0)); // only one direction removed
    CHECK(j.d.has_arc(0, j.map2[3]));
    CHECK(dichromatic_number(j.d) == 4);
    CHECK(lambda_max(j.d) == 3);

    CHECK_THROWS_AS(directed_hajos_join(directed_cycle(3), 0, 2, k4, 0, 1), Error);
    // missing arc u->v1
    CHECK_THROWS_AS(directed_hajos_join(k4, 0, 0, k4, 2, 3), Error);
}

TEST_CASE("bidirected join and degenerate bijoin coincide") {
    auto k4 = bidirected_complete(4);
    auto bd = bidirected_hajos_join(k4, 0, 1, k4, 0, 2);
    auto bj = hajos_bijoin(k4, 0, 1, 0, k4, 2, 0, 2); // t == w, u == v
    CHECK(bd.d == bj.d);
    CHECK(bd.d.has_digon(0, bd.map2[2]));
    CHECK(!bd.d.has_arc(0, 1));
    CHECK(dichromatic_number(bd.d) == 4);

    CHECK_THROWS_AS(bidirected_hajos_join(directed_cycle(3), 0, 1, k4, 0, 1), Error);
}

TEST_CASE("bijoin drops the dichromatic number") {
    auto k4 = bidirected_complete(4);
    auto j = hajos_bijoin(k4, 0, 1, 2, k4, 0, 1, 2);
    CHECK(j.d.order() == 7);
    CHECK(dichromatic_number(j.d) == 3);
    CHECK_THROWS_AS(hajos_bijoin(k4, 0, 1, 1, k4, 0, 1, 2), Error); // a1 == w
}

TEST_CASE("boundary walk of an embedded tree") {
    auto path = path_tree(3);
    CHECK(boundary_walk(path) == std::vector<int>{0, 1, 2, 1});

    EmbeddedTree star;
    star.n = 4;
    star.rotation = {{1, 2, 3}, {0}, {0}, {0}};
    CHECK(boundary_walk(star) == std::vector<int>{1, 0, 2, 0, 3, 0});

    EmbeddedTree bad;
    bad.n = 3;
    bad.rotation = {{1}, {0}, {}};
    CHECK_THROWS_AS(boundary_walk(bad), Error); // not a tree
}

TEST_CASE("peripheral validation") {
    TreeJoinSpec spec = path_spec_k4(2);
    CHECK(validate_peripheral(spec, PeripheralMode::LeavesOnly));
    spec.peripheral = {2, 0}; // rotation of the leaf order
    CHECK(validate_peripheral(spec, PeripheralMode::LeavesOnly));
    spec.peripheral = {0, 1, 2};
    CHECK(!validate_peripheral(spec, PeripheralMode::LeavesOnly));
    CHECK(validate_peripheral(spec, PeripheralMode::PartialEulerian));
    spec.peripheral = {0};
    CHECK(!validate_peripheral(spec, PeripheralMode::PartialEulerian)); // misses a leaf

    // Star with hub 0: boundary walk 1,0,2,0,3,0.
    TreeJoinSpec star;
    star.tree.n = 4;
    star.tree.rotation = {{1, 2, 3}, {0}, {0}, {0}};
    for (int i = 1; i <= 3; ++i) {
        star.edges.emplace_back(0, i);
        star.pieces.push_back({bidirected_complete(4), 0, 1});
    }
    star.peripheral = {1, 2, 3};
    CHECK(validate_peripheral(star, PeripheralMode::LeavesOnly));
    star.peripheral = {1, 3, 2}; // leaves against the rotation order
    CHECK(!validate_peripheral(star, PeripheralMode::LeavesOnly));
    CHECK(!validate_peripheral(star, PeripheralMode::PartialEulerian));
    star.peripheral = {1, 2, 0, 3}; // hub slotted into its walk position
    CHECK(validate_peripheral(star, PeripheralMode::PartialEulerian));
}

TEST_CASE("tree join over a path of two pieces") {
    auto r = hajos_tree_join(path_spec_k4(2));
    CHECK(r.d.order() == 2 + 1 + 2 * 2); // 3 junctions + 2 interiors per piece
    // Junction digons are gone, peripheral dicycle 0 -> 2 -> 0 is there.
    CHECK(!r.d.has_digon(0, 1));
    CHECK(r.d.has_arc(0, 2));
    CHECK(r.d.has_arc(2, 0));
    CHECK(dichromatic_number(r.d) == 4);
    CHECK(lambda_max(r.d) == 3);
    CHECK(is_k_extremal_oracle(r.d, 3));
    // Piece maps place the junctions on the tree labels.
    CHECK(r.piece_maps[0][0] == 0);
    CHECK(r.piece_maps[0][1] == 1);
    CHECK(r.piece_maps[1][0] == 1);
    CHECK(r.piece_maps[1][1] == 2);

    auto bad = path_spec_k4(2);
    bad.peripheral = {0, 1, 2};
    CHECK_THROWS_AS(hajos_tree_join(bad), Error);
    CHECK(extended_hajos_tree_join(bad).d.order() == 7);
}

TEST_CASE("two-tree join turns flagged edges into digons") {
    auto spec = path_spec_k4(2);
    spec.pieces[0] = {symmetric_cycle(3), 0, 1};
    spec.pieces[1] = {symmetric_cycle(3), 0, 1};
    CHECK_THROWS_AS(two_hajos_tree_join(spec, {true, false}), Error); // odd B-count 0-2
    auto spec4 = path_spec_k4(4);
    for (auto& p : spec4.pieces) p = {symmetric_cycle(3), 0, 1};
    auto r = two_hajos_tree_join(spec4, {false, true, true, false});
    CHECK(r.d.has_digon(1, 2));
    CHECK(r.d.has_digon(2, 3));
    CHECK(is_k_extremal_oracle(r.d, 2));
}

TEST_CASE("parallel join splices a digon piece between two lobes") {
    std::vector<Arc> arcs;
    auto add_clique = [&](std::vector<int> vs) {
        for (int i : vs)
            for (int j : vs)
                if (i != j) arcs.emplace_back(i, j);
    };
    add_clique({0, 1, 2, 6});
    add_clique({3, 4, 5, 6});
    arcs.emplace_back(0, 3); // t -> u
    arcs.emplace_back(4, 1); // v -> w
    auto d_ac = Digraph::build(7, arcs);
    auto k4 = bidirected_complete(4);
    auto r = parallel_hajos_join(d_ac, 6, 0, 3, 4, 1, k4, 0, 1);
    CHECK(r.d.order() == 10); // 6 lobe vertices + 4 piece vertices
    CHECK(r.ac_map[6] == -1);
    CHECK(!r.d.has_digon(r.b_map[0], r.b_map[1]));
    CHECK(r.d.has_arc(r.ac_map[0], r.ac_map[3])); // crossing arcs survive
    CHECK(r.d.has_arc(r.ac_map[4], r.ac_map[1]));

    // x adjacent to a crossing endpoint is rejected.
    CHECK_THROWS_AS(parallel_hajos_join(d_ac, 0, 0, 3, 4, 1, k4, 0, 1), Error);
    // piece without the digon
    CHECK_THROWS_AS(parallel_hajos_join(d_ac, 6, 0, 3, 4, 1, directed_cycle(4), 0, 1), Error);
}

TEST_CASE("random members are deterministic per seed") {
    auto a = random_member(3, 2, 17);
    auto b = random_member(3, 2, 17);
    CHECK(a.d == b.d);
    CHECK(a.d.order() <= 16);
    CHECK(is_k_extremal_oracle(a.d, 3));
    REQUIRE(a.certificate);
    CHECK(certifies(*a.certificate, a.d));

    auto c = random_member(4, 1, 5);
    CHECK(is_k_extremal_oracle(c.d, 4));

    CHECK(random_two_tree_join(9) == random_two_tree_join(9));
    CHECK_THROWS_AS(random_two_tree_join(1, 4), Error);
}

} // TEST_SUITE
