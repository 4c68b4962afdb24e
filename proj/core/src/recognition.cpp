#include "extremal/recognition.hpp"

#include <algorithm>
#include <functional>

#include "extremal/connectivity.hpp"
#include "extremal/dicolouring.hpp"

namespace extremal {

namespace {

void check_deadline(const Deadline& deadline) {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        fail(Errc::Timeout, "recognition deadline exceeded");
}

Digraph apply_relabel(const Digraph& g, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    for (auto [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return Digraph::build(g.order(), std::move(arcs));
}

int local_of(const std::vector<int>& sorted_vertices, int input) {
    return static_cast<int>(std::lower_bound(sorted_vertices.begin(), sorted_vertices.end(), input) -
                            sorted_vertices.begin());
}

// Bridges of the underlying simple graph, as sorted (u,v) pairs with u < v.
std::vector<std::pair<int, int>> underlying_bridges(const Digraph& d) {
    const int n = d.order();
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : d.arcs())
        if (u < v || !d.has_arc(v, u)) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> bridges;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        num[v] = low[v] = timer++;
        for (int w : adj[v]) {
            if (w == parent) {
                parent = -2;
                continue;
            }
            if (num[w] < 0) {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > num[v]) bridges.emplace_back(std::min(v, w), std::max(v, w));
            } else {
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (num[s] < 0) dfs(s, -1);
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

} // namespace

bool is_k_extremal_oracle(const Digraph& d, int k) {
    if (k < 1) fail(Errc::BadParameter, "oracle needs k >= 1");
    if (d.order() > 18) fail(Errc::BudgetExceeded, "oracle is limited to 18 vertices");
    if (d.order() < 2) return false;
    return is_strong(d) && is_biconnected(d) && lambda_max(d) == k &&
           dichromatic_number(d) == k + 1;
}

std::optional<DirectedSplit> find_directed_split(const Digraph& d, Deadline deadline) {
    const int n = d.order();
    for (int u = 0; u < n; ++u) {
        check_deadline(deadline);
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (!d.has_arc(u, w)) continue;
                if (d.has_arc(u, v) || d.has_arc(v, w)) continue;

                std::vector<int> rest;
                for (int y = 0; y < n; ++y)
                    if (y != v) rest.push_back(y);
                auto sub = induced(d.without_arc(u, w), rest);
                auto comps = connected_components(sub.d);
                if (comps.size() != 2) continue;
                std::vector<int> comp_of(n, -1);
                for (std::size_t c = 0; c < comps.size(); ++c)
                    for (int y : comps[c]) comp_of[sub.vertices[y]] = static_cast<int>(c);
                if (comp_of[u] == comp_of[w]) continue;

                std::vector<int> s1{v}, s2{v};
                for (int y = 0; y < n; ++y) {
                    if (y == v) continue;
                    (comp_of[y] == comp_of[u] ? s1 : s2).push_back(y);
                }
                auto sub1 = induced(d, s1);
                auto sub2 = induced(d, s2);
                int u1 = local_of(sub1.vertices, u), v1 = local_of(sub1.vertices, v);
                int v2 = local_of(sub2.vertices, v), w2 = local_of(sub2.vertices, w);
                Digraph d1 = sub1.d.with_arc(u1, v1);
                Digraph d2 = sub2.d.with_arc(v2, w2);

                auto join = directed_hajos_join(d1, u1, v1, d2, v2, w2);
                std::vector<int> perm(join.d.order(), -1);
                for (std::size_t i = 0; i < sub1.vertices.size(); ++i)
                    perm[join.map1[i]] = sub1.vertices[i];
                for (std::size_t i = 0; i < sub2.vertices.size(); ++i)
                    perm[join.map2[i]] = sub2.vertices[i];
                if (apply_relabel(join.d, perm) != d) continue;

                return DirectedSplit{u,           v,
                                     w,           std::move(d1),
                                     std::move(d2), std::move(sub1.vertices),
                                     std::move(sub2.vertices), std::move(perm)};
            }
        }
    }
    return std::nullopt;
}

std::optional<ParallelSplit> find_parallel_split(const Digraph& d, Deadline deadline) {
    const int n = d.order();
    for (auto [t, u] : d.arcs()) {
        check_deadline(deadline);
        for (auto [v, w] : d.arcs()) {
            if (std::make_pair(t, u) == std::make_pair(v, w)) continue;
            for (int a = 0; a < n; ++a) {
                if (a == t || a == u || a == v || a == w) continue;
                for (int b = 0; b < n; ++b) {
                    if (b == a || b == t || b == u || b == v || b == w) continue;
                    if (d.adjacent(a, b)) continue;

                    std::vector<int> rest;
                    for (int y = 0; y < n; ++y)
                        if (y != a && y != b) rest.push_back(y);
                    auto sub = induced(d.without_arc(t, u).without_arc(v, w), rest);
                    auto comps = connected_components(sub.d);
                    std::vector<int> comp_of(n, -1);
                    for (std::size_t c = 0; c < comps.size(); ++c)
                        for (int y : comps[c]) comp_of[sub.vertices[y]] = static_cast<int>(c);
                    if (comp_of[t] != comp_of[w] || comp_of[u] != comp_of[v]) continue;
                    if (comp_of[t] == comp_of[u]) continue;
                    if (comps.size() < 3) continue; // the middle part must be nonempty

                    // a may only touch the t/w side and the middle, b only
                    // the u/v side and the middle.
                    auto side_of = [&](int y) { return y == a || y == b ? -1 : comp_of[y]; };
                    bool clean = true;
                    for (int y : d.out(a)) clean = clean && side_of(y) != comp_of[u];
                    for (int y : d.in(a)) clean = clean && side_of(y) != comp_of[u];
                    for (int y : d.out(b)) clean = clean && side_of(y) != comp_of[t];
                    for (int y : d.in(b)) clean = clean && side_of(y) != comp_of[t];
                    if (!clean) continue;

                    std::vector<int> side_ac, side_b{a, b};
                    for (int y = 0; y < n; ++y) {
                        if (y == a || y == b) continue;
                        if (comp_of[y] == comp_of[t] || comp_of[y] == comp_of[u])
                            side_ac.push_back(y);
                        else
                            side_b.push_back(y);
                    }
                    std::sort(side_b.begin(), side_b.end());

                    // d_ac: both lobes plus the rebuilt split vertex x (last label).
                    const int x = static_cast<int>(side_ac.size());
                    std::vector<Arc> ac_arcs;
                    for (auto [p, q] : d.arcs()) {
                        bool p_ac = p != a && p != b && comp_of[p] >= 0 &&
                                    (comp_of[p] == comp_of[t] || comp_of[p] == comp_of[u]);
                        bool q_ac = q != a && q != b && comp_of[q] >= 0 &&
                                    (comp_of[q] == comp_of[t] || comp_of[q] == comp_of[u]);
                        if (p_ac && q_ac)
                            ac_arcs.emplace_back(local_of(side_ac, p), local_of(side_ac, q));
                        else if ((p == a || p == b) && q_ac)
                            ac_arcs.emplace_back(x, local_of(side_ac, q));
                        else if (p_ac && (q == a || q == b))
                            ac_arcs.emplace_back(local_of(side_ac, p), x);
                    }
                    Digraph d_ac;
                    try {
                        d_ac = Digraph::build(x + 1, std::move(ac_arcs));
                    } catch (const Error&) {
                        continue; // the two x copies collide on a shared neighbour
                    }
                    auto sub_b = induced(d, side_b);
                    Digraph d_b =
                        sub_b.d.with_digon(local_of(side_b, a), local_of(side_b, b));

                    int tl = local_of(side_ac, t), ul = local_of(side_ac, u);
                    int vl = local_of(side_ac, v), wl = local_of(side_ac, w);
                    int al = local_of(side_b, a), bl = local_of(side_b, b);
                    ParallelJoinResult join;
                    try {
                        join = parallel_hajos_join(d_ac, x, tl, ul, vl, wl, d_b, al, bl);
                    } catch (const Error&) {
                        continue;
                    }
                    std::vector<int> perm(join.d.order(), -1);
                    for (std::size_t i = 0; i < side_ac.size(); ++i)
                        perm[join.ac_map[i]] = side_ac[i];
                    for (std::size_t i = 0; i < side_b.size(); ++i)
                        perm[join.b_map[i]] = side_b[i];
                    if (apply_relabel(join.d, perm) != d) continue;

                    ParallelSplit split;
                    split.t = t;
                    split.u = u;
                    split.v = v;
                    split.w = w;
                    split.a = a;
                    split.b = b;
                    split.d_ac = std::move(d_ac);
                    split.d_b = std::move(d_b);
                    split.x = x;
                    split.ac_map = side_ac;
                    split.ac_map.push_back(-1); // x has no single preimage
                    split.b_map = side_b;
                    split.relabel = std::move(perm);
                    return split;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<StarSplit> find_star_split(const Digraph& d, Deadline deadline) {
    const int n = d.order();
    for (int y = 0; y < n; ++y) {
        check_deadline(deadline);
        for (auto [pl, p1] : d.arcs()) {
            if (pl == y || p1 == y) continue;

            std::vector<int> rest;
            for (int z = 0; z < n; ++z)
                if (z != y) rest.push_back(z);
            auto sub = induced(d.without_arc(pl, p1), rest);

            // The remaining peripheral arcs must be bridges; the candidate
            // cycle is the unique bridge-forest path closing the chord.
            auto bridges = underlying_bridges(sub.d);
            std::vector<std::vector<int>> badj(sub.d.order());
            for (auto [p, q] : bridges) {
                badj[p].push_back(q);
                badj[q].push_back(p);
            }
            int from = local_of(sub.vertices, p1), to = local_of(sub.vertices, pl);
            std::vector<int> parent(sub.d.order(), -1);
            std::vector<int> queue{from};
            parent[from] = from;
            for (std::size_t qi = 0; qi < queue.size(); ++qi)
                for (int z : badj[queue[qi]])
                    if (parent[z] < 0) parent[z] = queue[qi], queue.push_back(z);
            if (parent[to] < 0) continue;
            std::vector<int> path;
            for (int z = to; z != from; z = parent[z]) path.push_back(z);
            path.push_back(from);
            std::reverse(path.begin(), path.end()); // p1 .. pl, local labels

            std::vector<int> cycle;
            for (int z : path) cycle.push_back(sub.vertices[z]);
            const int l = static_cast<int>(cycle.size());
            if (l < 2) continue;
            bool oriented = true;
            for (int i = 0; i + 1 < l && oriented; ++i)
                oriented = d.has_arc(cycle[i], cycle[i + 1]);
            if (!oriented) continue;

            // Remove the hub and the cycle arcs; the pieces are the parts.
            Digraph stripped = d;
            for (int i = 0; i < l; ++i) stripped = stripped.without_arc(cycle[i], cycle[(i + 1) % l]);
            auto sub2 = induced(stripped, rest);
            auto comps = connected_components(sub2.d);
            if (static_cast<int>(comps.size()) != l) continue;
            std::vector<int> comp_of(sub2.d.order(), -1);
            for (std::size_t c = 0; c < comps.size(); ++c)
                for (int z : comps[c]) comp_of[z] = static_cast<int>(c);

            StarSplit split;
            split.hub = y;
            split.cycle = cycle;
            bool ok = true;
            std::vector<char> comp_used(comps.size(), 0);
            for (int i = 0; i < l && ok; ++i) {
                int c = comp_of[local_of(sub2.vertices, cycle[i])];
                if (comp_used[c]) {
                    ok = false;
                    break;
                }
                comp_used[c] = 1;
                std::vector<int> part{y};
                for (int z : comps[c]) part.push_back(sub2.vertices[z]);
                auto piece_sub = induced(d, part);
                int hub_l = local_of(piece_sub.vertices, y);
                int p_l = local_of(piece_sub.vertices, cycle[i]);
                split.pieces.push_back(piece_sub.d.with_digon(hub_l, p_l));
                split.maps.push_back(piece_sub.vertices);
                split.piece_uv.emplace_back(hub_l, p_l);
            }
            if (!ok) continue;

            // Rebuild the star join and demand an exact match.
            TreeJoinSpec spec;
            spec.tree.n = l + 1;
            spec.tree.rotation.assign(l + 1, {});
            for (int i = 1; i <= l; ++i) {
                spec.tree.rotation[0].push_back(i);
                spec.tree.rotation[i].push_back(0);
            }
            for (int i = 0; i < l; ++i) {
                spec.edges.emplace_back(0, i + 1);
                spec.pieces.push_back(
                    TreePiece{split.pieces[i], split.piece_uv[i].first, split.piece_uv[i].second});
                spec.peripheral.push_back(i + 1);
            }
            TreeJoinResult join;
            try {
                join = hajos_tree_join(spec);
            } catch (const Error&) {
                continue;
            }
            std::vector<int> perm(join.d.order(), -1);
            perm[0] = y;
            for (int i = 0; i < l; ++i) perm[i + 1] = cycle[i];
            for (int i = 0; i < l; ++i)
                for (std::size_t z = 0; z < split.maps[i].size(); ++z)
                    perm[join.piece_maps[i][z]] = split.maps[i][z];
            if (apply_relabel(join.d, perm) != d) continue;
            split.relabel = std::move(perm);
            return split;
        }
    }
    return std::nullopt;
}

namespace {

// Compose the per-node relabel with the child certificates' labellings:
// the children already replay to the part digraphs verbatim, so the split's
// relabel (join label -> input label) is exactly the node relabel.
std::optional<Certificate> recognize_inner(const Digraph& d, int k, const Deadline& deadline);

std::optional<Certificate> recurse_pair(Certificate::Kind kind, const Digraph& p1,
                                        const Digraph& p2, std::vector<int> args,
                                        std::vector<int> relabel, int k,
                                        const Deadline& deadline) {
    auto c1 = recognize_inner(p1, k, deadline);
    if (!c1) return std::nullopt;
    auto c2 = recognize_inner(p2, k, deadline);
    if (!c2) return std::nullopt;
    Certificate cert;
    cert.kind = kind;
    cert.children = {std::move(*c1), std::move(*c2)};
    cert.args = std::move(args);
    cert.relabel = std::move(relabel);
    return cert;
}

std::optional<Certificate> recognize_inner(const Digraph& d, int k, const Deadline& deadline) {
    check_deadline(deadline);
    const int n = d.order();
    if (n < k + 1) return std::nullopt;
    if (!is_strong(d) || !is_biconnected(d) || !is_eulerian(d)) return std::nullopt;

    if (n == k + 1 && is_bidirected_complete(d)) {
        Certificate cert;
        cert.kind = Certificate::Kind::BaseComplete;
        cert.param = k + 1;
        return cert;
    }
    if (k == 3 && is_symmetric_odd_wheel(d) && n >= 6) {
        int hub = wheel_hub(d);
        // Walk the rim from its smallest vertex to line the labels up with
        // the canonical wheel.
        std::vector<int> rim;
        for (int v = 0; v < n; ++v)
            if (v != hub) rim.push_back(v);
        std::vector<int> walk{rim[0]};
        int prev = -1;
        while (static_cast<int>(walk.size()) < n - 1) {
            int cur = walk.back(), nxt = -1;
            for (int z : d.out(cur))
                if (z != hub && z != prev) {
                    nxt = z;
                    break;
                }
            prev = cur;
            walk.push_back(nxt);
        }
        Certificate cert;
        cert.kind = Certificate::Kind::BaseOddWheel;
        cert.param = (n - 2) / 2;
        cert.relabel = walk;
        cert.relabel.push_back(hub);
        return cert;
    }

    if (auto s = find_directed_split(d, deadline)) {
        int u1 = local_of(s->map1, s->u), v1 = local_of(s->map1, s->v);
        int v2 = local_of(s->map2, s->v), w2 = local_of(s->map2, s->w);
        return recurse_pair(Certificate::Kind::DirectedJoin, s->d1, s->d2, {u1, v1, v2, w2},
                            std::move(s->relabel), k, deadline);
    }
    if (auto s = find_parallel_split(d, deadline)) {
        std::vector<int> ac_sorted = s->ac_map;
        ac_sorted.pop_back(); // drop the split vertex sentinel
        int tl = local_of(ac_sorted, s->t), ul = local_of(ac_sorted, s->u);
        int vl = local_of(ac_sorted, s->v), wl = local_of(ac_sorted, s->w);
        int al = local_of(s->b_map, s->a), bl = local_of(s->b_map, s->b);
        return recurse_pair(Certificate::Kind::ParallelJoin, s->d_ac, s->d_b,
                            {s->x, tl, ul, vl, wl, al, bl}, std::move(s->relabel), k, deadline);
    }
    if (auto s = find_star_split(d, deadline)) {
        Certificate cert;
        cert.kind = Certificate::Kind::StarJoin;
        for (std::size_t i = 0; i < s->pieces.size(); ++i) {
            auto child = recognize_inner(s->pieces[i], k, deadline);
            if (!child) return std::nullopt;
            cert.children.push_back(std::move(*child));
            cert.piece_uv.push_back(s->piece_uv[i]);
        }
        cert.relabel = std::move(s->relabel);
        return cert;
    }
    return std::nullopt;
}

} // namespace

std::optional<Certificate> recognize_extremal(const Digraph& d, int k, Deadline deadline) {
    if (k < 3) fail(Errc::BadK, "structural recognition needs k >= 3");
    auto cert = recognize_inner(d, k, deadline);
    return cert;
}

ExtremalVerdict chi_equals_lambda_plus_one(const Digraph& d, Deadline deadline) {
    if (d.order() == 0) fail(Errc::TooSmall, "empty digraph");
    ExtremalVerdict verdict;
    if (d.size() == 0) {
        verdict.k = 0;
        verdict.satisfied = true; // an arcless digraph is acyclic, so chi = 1
        return verdict;
    }
    verdict.k = lambda_max(d);
    const int k = verdict.k;
    if (k == 0) return verdict; // unreachable with arcs present; defensive

    for (const auto& comp : strong_components(d)) {
        if (comp.size() < 2) continue;
        auto sub = induced(d, comp);
        for (const auto& block : block_decomposition(sub.d).blocks) {
            check_deadline(deadline);
            auto blk = induced(sub.d, block);
            std::vector<int> global;
            for (int z : blk.vertices) global.push_back(sub.vertices[z]);

            if (k == 1) {
                if (!is_directed_cycle_graph(blk.d)) continue;
                Certificate cert;
                cert.kind = Certificate::Kind::BaseDirectedCycle;
                cert.param = blk.d.order();
                cert.relabel = {0};
                for (int i = 1; i < blk.d.order(); ++i)
                    cert.relabel.push_back(blk.d.out(cert.relabel.back())[0]);
                for (int& z : cert.relabel) z = global[z];
                verdict.satisfied = true;
                verdict.witness_block = global;
                verdict.certificate = std::move(cert);
                verdict.method = ExtremalVerdict::Method::Structural;
                return verdict;
            }
            if (k == 2) {
                if (!is_k_extremal_oracle(blk.d, 2)) continue;
                verdict.satisfied = true;
                verdict.witness_block = global;
                verdict.method = ExtremalVerdict::Method::Oracle;
                return verdict;
            }
            auto cert = recognize_extremal(blk.d, k, deadline);
            if (!cert) continue;
            if (cert->relabel.empty()) {
                cert->relabel.resize(blk.d.order());
                for (int i = 0; i < blk.d.order(); ++i) cert->relabel[i] = i;
            }
            for (int& z : cert->relabel) z = global[z];
            verdict.satisfied = true;
            verdict.witness_block = global;
            verdict.certificate = std::move(cert);
            verdict.method = ExtremalVerdict::Method::Structural;
            return verdict;
        }
    }
    verdict.method =
        k >= 3 ? ExtremalVerdict::Method::Structural : ExtremalVerdict::Method::Oracle;
    return verdict;
}

} // namespace extremal
