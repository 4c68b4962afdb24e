#include "extremal/constructions.hpp"

#include <algorithm>
#include <random>

#include "extremal/certificate.hpp"

namespace extremal {

namespace {

void need_vertex(const Digraph& d, int v, const char* role) {
    if (v < 0 || v >= d.order()) fail(Errc::OutOfRange, std::string(role) + " out of range");
}

void need_arc(const Digraph& d, int u, int v) {
    if (!d.has_arc(u, v))
        fail(Errc::MissingArc,
             "required arc (" + std::to_string(u) + "," + std::to_string(v) + ") absent");
}

void need_digon(const Digraph& d, int u, int v) {
    if (!d.has_digon(u, v))
        fail(Errc::MissingDigon,
             "required digon [" + std::to_string(u) + "," + std::to_string(v) + "] absent");
}

bool same_component_without(const Digraph& d, int removed, int a, int b) {
    std::vector<int> rest;
    for (int v = 0; v < d.order(); ++v)
        if (v != removed) rest.push_back(v);
    auto sub = induced(d, rest);
    auto pos = [&](int v) {
        return static_cast<int>(std::lower_bound(sub.vertices.begin(), sub.vertices.end(), v) -
                                sub.vertices.begin());
    };
    for (const auto& comp : connected_components(sub.d)) {
        bool has_a = std::binary_search(comp.begin(), comp.end(), pos(a));
        bool has_b = std::binary_search(comp.begin(), comp.end(), pos(b));
        if (has_a || has_b) return has_a && has_b;
    }
    return false;
}

// Relabelling for the right operand of a pairwise join: `glue` takes the
// label `onto`, everything else is appended starting at `next`.
std::vector<int> append_map(int n, int glue, int onto, int next) {
    std::vector<int> map(n, -1);
    for (int v = 0; v < n; ++v) map[v] = v == glue ? onto : next++;
    return map;
}

} // namespace

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

Digraph bidirected_complete(int n) {
    if (n < 1) fail(Errc::BadParameter, "complete digraph needs n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph::build(n, std::move(arcs));
}

Digraph directed_cycle(int n) {
    if (n < 2) fail(Errc::BadParameter, "directed cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return Digraph::build(n, std::move(arcs));
}

Digraph symmetric_cycle(int n) {
    if (n < 3) fail(Errc::BadParameter, "symmetric cycle needs n >= 3");
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) {
        arcs.emplace_back(v, (v + 1) % n);
        arcs.emplace_back((v + 1) % n, v);
    }
    return Digraph::build(n, std::move(arcs));
}

Digraph symmetric_odd_wheel(int l) {
    if (l < 1) fail(Errc::BadParameter, "odd wheel needs l >= 1");
    const int rim = 2 * l + 1, hub = rim;
    std::vector<Arc> arcs;
    for (int v = 0; v < rim; ++v) {
        arcs.emplace_back(v, (v + 1) % rim);
        arcs.emplace_back((v + 1) % rim, v);
        arcs.emplace_back(v, hub);
        arcs.emplace_back(hub, v);
    }
    return Digraph::build(rim + 1, std::move(arcs));
}

Digraph base(BaseKind kind, int parameter) {
    switch (kind) {
    case BaseKind::Complete:
        if (parameter < 4) fail(Errc::BadParameter, "complete base needs >= 4 vertices");
        return bidirected_complete(parameter);
    case BaseKind::OddWheel: return symmetric_odd_wheel(parameter);
    case BaseKind::DirectedCycle: return directed_cycle(parameter);
    case BaseKind::SymmetricOddCycle:
        if (parameter < 1) fail(Errc::BadParameter, "odd cycle base needs l >= 1");
        return symmetric_cycle(2 * parameter + 1);
    }
    fail(Errc::BadParameter, "unknown base kind");
}

// ---------------------------------------------------------------------------
// Pairwise joins
// ---------------------------------------------------------------------------

JoinResult directed_hajos_join(const Digraph& d1, int u, int v1, const Digraph& d2, int v2,
                               int w) {
    need_vertex(d1, u, "u");
    need_vertex(d1, v1, "v1");
    need_vertex(d2, v2, "v2");
    need_vertex(d2, w, "w");
    if (u == v1 || v2 == w) fail(Errc::SameVertex, "join arc endpoints coincide");
    need_arc(d1, u, v1);
    need_arc(d2, v2, w);

    const int n1 = d1.order();
    std::vector<int> map1(n1);
    for (int v = 0; v < n1; ++v) map1[v] = v;
    auto map2 = append_map(d2.order(), v2, v1, n1);

    std::vector<Arc> arcs;
    for (auto [a, b] : d1.arcs())
        if (!(a == u && b == v1)) arcs.emplace_back(a, b);
    for (auto [a, b] : d2.arcs())
        if (!(a == v2 && b == w)) arcs.emplace_back(map2[a], map2[b]);
    arcs.emplace_back(u, map2[w]);
    return {Digraph::build(n1 + d2.order() - 1, std::move(arcs)), std::move(map1),
            std::move(map2)};
}

JoinResult bidirected_hajos_join(const Digraph& d1, int u, int v1, const Digraph& d2, int v2,
                                 int w) {
    need_vertex(d1, u, "u");
    need_vertex(d1, v1, "v1");
    need_vertex(d2, v2, "v2");
    need_vertex(d2, w, "w");
    if (u == v1 || v2 == w) fail(Errc::SameVertex, "join digon endpoints coincide");
    need_digon(d1, u, v1);
    need_digon(d2, v2, w);

    const int n1 = d1.order();
    std::vector<int> map1(n1);
    for (int v = 0; v < n1; ++v) map1[v] = v;
    auto map2 = append_map(d2.order(), v2, v1, n1);

    std::vector<Arc> arcs;
    for (auto [a, b] : d1.arcs())
        if (!(a == u && b == v1) && !(a == v1 && b == u)) arcs.emplace_back(a, b);
    for (auto [a, b] : d2.arcs())
        if (!(a == v2 && b == w) && !(a == w && b == v2)) arcs.emplace_back(map2[a], map2[b]);
    arcs.emplace_back(u, map2[w]);
    arcs.emplace_back(map2[w], u);
    return {Digraph::build(n1 + d2.order() - 1, std::move(arcs)), std::move(map1),
            std::move(map2)};
}

JoinResult hajos_bijoin(const Digraph& d1, int t, int a1, int w, const Digraph& d2, int v, int a2,
                        int u) {
    need_vertex(d1, t, "t");
    need_vertex(d1, a1, "a1");
    need_vertex(d1, w, "w");
    need_vertex(d2, v, "v");
    need_vertex(d2, a2, "a2");
    need_vertex(d2, u, "u");
    if (t == a1 || w == a1 || v == a2 || u == a2)
        fail(Errc::SameVertex, "bijoin anchor equals its glue vertex");
    need_arc(d1, t, a1);
    need_arc(d1, a1, w);
    need_arc(d2, v, a2);
    need_arc(d2, a2, u);
    if (!same_component_without(d1, a1, t, w))
        fail(Errc::ComponentViolation, "t and w separate when the glue vertex is removed");
    if (!same_component_without(d2, a2, u, v))
        fail(Errc::ComponentViolation, "u and v separate when the glue vertex is removed");

    const int n1 = d1.order();
    std::vector<int> map1(n1);
    for (int x = 0; x < n1; ++x) map1[x] = x;
    auto map2 = append_map(d2.order(), a2, a1, n1);

    std::vector<Arc> arcs;
    for (auto [a, b] : d1.arcs())
        if (!(a == t && b == a1) && !(a == a1 && b == w)) arcs.emplace_back(a, b);
    for (auto [a, b] : d2.arcs())
        if (!(a == v && b == a2) && !(a == a2 && b == u)) arcs.emplace_back(map2[a], map2[b]);
    arcs.emplace_back(t, map2[u]);
    arcs.emplace_back(map2[v], w);
    return {Digraph::build(n1 + d2.order() - 1, std::move(arcs)), std::move(map1),
            std::move(map2)};
}

// ---------------------------------------------------------------------------
// Embedded trees
// ---------------------------------------------------------------------------

std::vector<int> EmbeddedTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> EmbeddedTree::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : rotation[v])
            if (v < w) edges.emplace_back(v, w);
    std::sort(edges.begin(), edges.end());
    return edges;
}

void EmbeddedTree::validate() const {
    if (n < 2) fail(Errc::BadParameter, "tree needs at least one edge");
    if (static_cast<int>(rotation.size()) != n)
        fail(Errc::BadParameter, "rotation table size mismatch");
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        auto nb = rotation[v];
        if (nb.empty()) fail(Errc::BadParameter, "isolated tree vertex");
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] < 0 || nb[i] >= n) fail(Errc::OutOfRange, "tree neighbour out of range");
            if (nb[i] == v) fail(Errc::BadParameter, "tree loop");
            if (i > 0 && nb[i] == nb[i - 1]) fail(Errc::BadParameter, "repeated tree neighbour");
            const auto& back = rotation[nb[i]];
            if (std::find(back.begin(), back.end(), v) == back.end())
                fail(Errc::BadParameter, "asymmetric rotation table");
        }
        degree_sum += static_cast<int>(nb.size());
    }
    if (degree_sum != 2 * (n - 1)) fail(Errc::BadParameter, "edge count is not n-1");

    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : rotation[v])
            if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    if (reached != n) fail(Errc::BadParameter, "tree is disconnected");
}

std::vector<int> boundary_walk(const EmbeddedTree& t) {
    t.validate();
    int start = -1;
    for (int v = 0; v < t.n && start < 0; ++v)
        if (t.is_leaf(v)) start = v;

    // Follow darts: after entering w from v, leave along the neighbour
    // after v in w's rotation.
    auto next = [&](std::pair<int, int> dart) {
        auto [v, w] = dart;
        const auto& rot = t.rotation[w];
        auto it = std::find(rot.begin(), rot.end(), v);
        std::size_t i = static_cast<std::size_t>(it - rot.begin());
        return std::pair<int, int>{w, rot[(i + 1) % rot.size()]};
    };

    std::pair<int, int> first{start, t.rotation[start][0]};
    std::vector<int> walk;
    auto cur = first;
    do {
        walk.push_back(cur.first);
        cur = next(cur);
    } while (cur != first);
    return walk;
}

namespace {

bool circular_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) return a.size() == b.size();
    for (std::size_t shift = 0; shift < b.size(); ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            ok = a[i] == b[(i + shift) % b.size()];
        if (ok) return true;
    }
    return false;
}

bool circular_subsequence(const std::vector<int>& sub, const std::vector<int>& walk) {
    if (sub.empty()) return false;
    for (std::size_t shift = 0; shift < walk.size(); ++shift) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < walk.size() && j < sub.size(); ++i)
            if (walk[(i + shift) % walk.size()] == sub[j]) ++j;
        if (j == sub.size()) return true;
    }
    return false;
}

} // namespace

bool validate_peripheral(const TreeJoinSpec& spec, PeripheralMode mode) {
    spec.tree.validate();
    const auto& C = spec.peripheral;
    if (C.size() < 2) return false;
    std::vector<int> sorted = C;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : C)
        if (v < 0 || v >= spec.tree.n) return false;

    auto walk = boundary_walk(spec.tree);
    if (mode == PeripheralMode::LeavesOnly) {
        std::vector<int> leaf_seq;
        for (int v : walk)
            if (spec.tree.is_leaf(v)) leaf_seq.push_back(v);
        return circular_equal(C, leaf_seq);
    }
    for (int v : spec.tree.leaves())
        if (!std::binary_search(sorted.begin(), sorted.end(), v)) return false;
    return circular_subsequence(C, walk);
}

// ---------------------------------------------------------------------------
// Tree joins
// ---------------------------------------------------------------------------

namespace {

TreeJoinResult build_tree_join(const TreeJoinSpec& spec, const std::vector<bool>& is_b) {
    spec.tree.validate();
    auto tree_edges = spec.tree.edge_list();
    if (spec.edges.size() != tree_edges.size())
        fail(Errc::BadParameter, "one oriented edge per tree edge required");
    if (spec.pieces.size() != spec.edges.size())
        fail(Errc::BadParameter, "one piece per tree edge required");
    if (!is_b.empty() && is_b.size() != spec.edges.size())
        fail(Errc::BadParameter, "edge flag vector size mismatch");

    std::vector<std::pair<int, int>> normalized;
    for (auto [a, b] : spec.edges) {
        if (a == b) fail(Errc::SameVertex, "tree edge endpoints coincide");
        normalized.emplace_back(std::min(a, b), std::max(a, b));
    }
    auto check = normalized;
    std::sort(check.begin(), check.end());
    if (check != tree_edges) fail(Errc::BadParameter, "edge list does not match the tree");

    const int t = spec.tree.n;
    int next = t;
    std::vector<Arc> arcs;
    TreeJoinResult result;
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        if (!is_b.empty() && is_b[i]) {
            arcs.emplace_back(spec.edges[i].first, spec.edges[i].second);
            arcs.emplace_back(spec.edges[i].second, spec.edges[i].first);
            result.piece_maps.emplace_back();
            continue;
        }
        const auto& piece = spec.pieces[i];
        need_vertex(piece.d, piece.u, "piece junction u");
        need_vertex(piece.d, piece.v, "piece junction v");
        if (piece.u == piece.v) fail(Errc::SameVertex, "piece junction endpoints coincide");
        need_digon(piece.d, piece.u, piece.v);

        std::vector<int> map(piece.d.order(), -1);
        map[piece.u] = spec.edges[i].first;
        map[piece.v] = spec.edges[i].second;
        for (int v = 0; v < piece.d.order(); ++v)
            if (map[v] < 0) map[v] = next++;
        for (auto [a, b] : piece.d.arcs()) {
            bool junction_digon = (a == piece.u && b == piece.v) || (a == piece.v && b == piece.u);
            if (!junction_digon) arcs.emplace_back(map[a], map[b]);
        }
        result.piece_maps.push_back(std::move(map));
    }
    const auto& C = spec.peripheral;
    for (std::size_t j = 0; j < C.size(); ++j)
        arcs.emplace_back(C[j], C[(j + 1) % C.size()]);
    result.d = Digraph::build(next, std::move(arcs));
    return result;
}

} // namespace

TreeJoinResult hajos_tree_join(const TreeJoinSpec& spec) {
    if (!validate_peripheral(spec, PeripheralMode::LeavesOnly))
        fail(Errc::InvalidPeripheral, "peripheral list is not the embedded leaf order");
    return build_tree_join(spec, {});
}

TreeJoinResult extended_hajos_tree_join(const TreeJoinSpec& spec) {
    if (!validate_peripheral(spec, PeripheralMode::PartialEulerian))
        fail(Errc::InvalidPeripheral, "peripheral list is not a partial Eulerian order");
    return build_tree_join(spec, {});
}

TreeJoinResult tree_join_unchecked(const TreeJoinSpec& spec) { return build_tree_join(spec, {}); }

TreeJoinResult two_hajos_tree_join(const TreeJoinSpec& spec, const std::vector<bool>& is_b_edge) {
    if (is_b_edge.size() != spec.edges.size())
        fail(Errc::BadParameter, "edge flag vector size mismatch");
    if (!validate_peripheral(spec, PeripheralMode::LeavesOnly))
        fail(Errc::InvalidPeripheral, "peripheral list is not the embedded leaf order");

    // Every leaf-to-leaf tree path must cross an even number of B-edges.
    spec.tree.validate();
    auto tree_edges = spec.tree.edge_list();
    auto b_edge = [&](int a, int b) {
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        for (std::size_t i = 0; i < spec.edges.size(); ++i) {
            auto [x, y] = spec.edges[i];
            if (std::pair<int, int>{std::min(x, y), std::max(x, y)} == key) return bool(is_b_edge[i]);
        }
        fail(Errc::BadParameter, "edge missing from the list");
    };
    auto leaves = spec.tree.leaves();
    std::vector<int> parity(spec.tree.n, -1); // B-edge parity of the path from leaves[0]
    std::vector<int> stack{leaves[0]};
    parity[leaves[0]] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : spec.tree.rotation[v])
            if (parity[w] < 0) {
                parity[w] = parity[v] ^ (b_edge(v, w) ? 1 : 0);
                stack.push_back(w);
            }
    }
    for (int l : leaves)
        if (parity[l] != 0)
            fail(Errc::ParityViolation, "odd number of digon edges between two leaves");

    return build_tree_join(spec, is_b_edge);
}

// ---------------------------------------------------------------------------
// Parallel join
// ---------------------------------------------------------------------------

ParallelJoinResult parallel_hajos_join(const Digraph& d_ac, int x, int t, int u, int v, int w,
                                       const Digraph& d_b, int a, int b) {
    need_vertex(d_ac, x, "x");
    need_vertex(d_ac, t, "t");
    need_vertex(d_ac, u, "u");
    need_vertex(d_ac, v, "v");
    need_vertex(d_ac, w, "w");
    need_vertex(d_b, a, "a");
    need_vertex(d_b, b, "b");
    if (a == b) fail(Errc::SameVertex, "digon endpoints coincide");
    if (x == t || x == u || x == v || x == w)
        fail(Errc::SameVertex, "split vertex among the crossing arc endpoints");
    need_arc(d_ac, t, u);
    need_arc(d_ac, v, w);
    need_digon(d_b, a, b);

    // Sides of x, ignoring the two crossing arcs.
    std::vector<int> rest;
    for (int y = 0; y < d_ac.order(); ++y)
        if (y != x) rest.push_back(y);
    auto sub = induced(d_ac.without_arc(t, u).without_arc(v, w), rest);
    auto comps = connected_components(sub.d);
    std::vector<int> comp_of(d_ac.order(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int y : comps[c]) comp_of[sub.vertices[y]] = static_cast<int>(c);
    if (comp_of[t] != comp_of[w] || comp_of[u] != comp_of[v])
        fail(Errc::ComponentViolation, "crossing arc endpoints straddle the two sides");
    if (comp_of[t] == comp_of[u])
        fail(Errc::ComponentViolation, "the two sides of the split vertex coincide");
    if (comps.size() != 2)
        fail(Errc::BadPartition, "removing the split vertex leaves more than two sides");

    const int nb = d_b.order();
    std::vector<int> ac_map(d_ac.order(), -1);
    int next = nb;
    for (int side : {comp_of[t], comp_of[u]})
        for (int y = 0; y < d_ac.order(); ++y)
            if (y != x && comp_of[y] == side) ac_map[y] = next++;

    std::vector<int> b_map(nb);
    for (int y = 0; y < nb; ++y) b_map[y] = y;

    std::vector<Arc> arcs;
    for (auto [p, q] : d_b.arcs())
        if (!(p == a && q == b) && !(p == b && q == a)) arcs.emplace_back(p, q);
    int side_a = comp_of[t];
    auto x_copy = [&](int other) { return comp_of[other] == side_a ? a : b; };
    for (auto [p, q] : d_ac.arcs()) {
        if (p == x)
            arcs.emplace_back(x_copy(q), ac_map[q]);
        else if (q == x)
            arcs.emplace_back(ac_map[p], x_copy(p));
        else
            arcs.emplace_back(ac_map[p], ac_map[q]);
    }
    return {Digraph::build(nb + d_ac.order() - 1, std::move(arcs)), std::move(ac_map),
            std::move(b_map)};
}

// ---------------------------------------------------------------------------
// Random members
// ---------------------------------------------------------------------------

namespace {

struct Builder {
    Digraph d;
    Certificate cert;
};

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

Arc pick_arc(std::mt19937_64& rng, const Digraph& d) { return d.arcs()[pick(rng, d.size())]; }

Arc pick_digon(std::mt19937_64& rng, const Digraph& d) {
    std::vector<Arc> digons;
    for (auto [u, v] : d.arcs())
        if (u < v && d.has_arc(v, u)) digons.emplace_back(u, v);
    return digons[pick(rng, static_cast<int>(digons.size()))];
}

bool has_digon_somewhere(const Digraph& d) {
    for (auto [u, v] : d.arcs())
        if (u < v && d.has_arc(v, u)) return true;
    return false;
}

Builder base_builder(int k, std::mt19937_64& rng) {
    Certificate cert;
    if (k == 3 && pick(rng, 3) != 0) {
        cert.kind = Certificate::Kind::BaseOddWheel;
        cert.param = 1 + pick(rng, 2);
    } else {
        cert.kind = Certificate::Kind::BaseComplete;
        cert.param = k + 1;
    }
    return {replay(cert), std::move(cert)};
}

std::optional<Builder> try_directed_join(const Builder& cur, int k, int max_order,
                                         std::mt19937_64& rng) {
    Builder fresh = base_builder(k, rng);
    if (cur.d.order() + fresh.d.order() - 1 > max_order) return std::nullopt;
    const Builder& left = pick(rng, 2) ? cur : fresh;
    const Builder& right = &left == &cur ? fresh : cur;
    auto [u, v1] = pick_arc(rng, left.d);
    auto [v2, w] = pick_arc(rng, right.d);
    Certificate cert;
    cert.kind = Certificate::Kind::DirectedJoin;
    cert.children = {left.cert, right.cert};
    cert.args = {u, v1, v2, w};
    return Builder{directed_hajos_join(left.d, u, v1, right.d, v2, w).d, std::move(cert)};
}

std::optional<Builder> try_star_join(const Builder& cur, int k, int max_order,
                                     std::mt19937_64& rng) {
    if (!has_digon_somewhere(cur.d)) return std::nullopt;
    const int edges = 2 + pick(rng, 2);
    const int slot = pick(rng, edges);
    std::vector<Builder> pieces;
    int total = 1; // hub, plus each piece minus its two junction vertices plus one leaf
    for (int i = 0; i < edges; ++i) {
        pieces.push_back(i == slot ? cur : base_builder(k, rng));
        total += pieces.back().d.order() - 1;
    }
    if (total > max_order) return std::nullopt;

    Certificate cert;
    cert.kind = Certificate::Kind::StarJoin;
    for (auto& p : pieces) {
        auto [a, b] = pick_digon(rng, p.d);
        if (pick(rng, 2)) std::swap(a, b);
        cert.children.push_back(p.cert);
        cert.piece_uv.emplace_back(a, b); // a plays the hub, b the leaf
    }
    return Builder{replay(cert), std::move(cert)};
}

} // namespace

GeneratedMember random_member(int k, int join_budget, std::uint64_t seed, int max_order) {
    if (k < 3) fail(Errc::BadK, "generator needs k >= 3");
    if (join_budget < 0) fail(Errc::BadParameter, "negative join budget");
    if (max_order < k + 1) fail(Errc::BadParameter, "order cap below the base size");

    std::mt19937_64 rng(seed);
    Builder cur = base_builder(k, rng);
    for (int j = 0; j < join_budget; ++j) {
        std::optional<Builder> next;
        if (pick(rng, 2))
            next = try_star_join(cur, k, max_order, rng);
        if (!next) next = try_directed_join(cur, k, max_order, rng);
        if (!next) next = try_star_join(cur, k, max_order, rng);
        if (!next) break; // every option would exceed the order cap
        cur = std::move(*next);
    }
    GeneratedMember out;
    out.d = std::move(cur.d);
    out.certificate = std::make_shared<Certificate>(std::move(cur.cert));
    return out;
}

Digraph random_two_tree_join(std::uint64_t seed, int max_order) {
    if (max_order < 5) fail(Errc::BadParameter, "order cap below the smallest instance");
    std::mt19937_64 rng(seed);
    for (int attempt = 0;; ++attempt) {
        // Path tree: either no digon edges or the two edges at one end,
        // which keeps every leaf-to-leaf parity even.
        int m = attempt < 4 ? 2 + pick(rng, 3) : 2;
        EmbeddedTree tree;
        tree.n = m + 1;
        tree.rotation.assign(tree.n, {});
        for (int v = 0; v + 1 <= m; ++v) {
            tree.rotation[v].push_back(v + 1);
            tree.rotation[v + 1].push_back(v);
        }
        std::vector<bool> is_b(m, false);
        if (m >= 3 && pick(rng, 2)) is_b[m - 1] = is_b[m - 2] = true;

        TreeJoinSpec spec;
        spec.tree = tree;
        int total = tree.n;
        for (int i = 0; i < m; ++i) {
            spec.edges.emplace_back(i, i + 1);
            TreePiece piece;
            if (!is_b[i]) {
                piece.d = symmetric_cycle(3 + 2 * pick(rng, 2));
                piece.u = 0;
                piece.v = 1;
                total += piece.d.order() - 2;
            }
            spec.pieces.push_back(std::move(piece));
        }
        spec.peripheral = {0, m};
        if (total > max_order) continue;
        return two_hajos_tree_join(spec, is_b).d;
    }
}

} // namespace extremal
