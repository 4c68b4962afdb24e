#include "extremal/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace extremal {

Digraph Digraph::build(int n, std::vector<Arc> arcs) {
    if (n < 0) fail(Errc::BadParameter, "negative vertex count");
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::OutOfRange, "arc endpoint out of range");
        if (u == v) fail(Errc::LoopArc, "loop arc " + std::to_string(u));
        if (i > 0 && arcs[i] == arcs[i - 1])
            fail(Errc::DuplicateArc, "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    Digraph d;
    d.n_ = n;
    d.arcs_ = std::move(arcs);
    d.rebuild_adjacency();
    return d;
}

void Digraph::rebuild_adjacency() {
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

Digraph Digraph::with_arc(int u, int v) const {
    if (has_arc(u, v)) return *this;
    auto a = arcs_;
    a.emplace_back(u, v);
    return build(n_, std::move(a));
}

Digraph Digraph::without_arc(int u, int v) const {
    auto a = arcs_;
    a.erase(std::remove(a.begin(), a.end(), Arc{u, v}), a.end());
    return build(n_, std::move(a));
}

Digraph Digraph::with_digon(int u, int v) const { return with_arc(u, v).with_arc(v, u); }

Digraph Digraph::without_digon(int u, int v) const { return without_arc(u, v).without_arc(v, u); }

InducedSubdigraph induced(const Digraph& d, std::vector<int> S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    std::vector<int> pos(d.order(), -1);
    for (std::size_t i = 0; i < S.size(); ++i) pos[S[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs())
        if (pos[u] >= 0 && pos[v] >= 0) arcs.emplace_back(pos[u], pos[v]);
    return {Digraph::build(static_cast<int>(S.size()), std::move(arcs)), std::move(S)};
}

std::vector<std::vector<int>> connected_components(const Digraph& d) {
    const int n = d.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : d.out(v))
                if (comp[w] < 0) comp[w] = id, stack.push_back(w);
            for (int w : d.in(v))
                if (comp[w] < 0) comp[w] = id, stack.push_back(w);
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Digraph& d) { return connected_components(d).size() <= 1; }

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    // Tarjan, iterative.
    const int n = d.order();
    std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0), scc(n, -1);
    std::vector<int> stack;
    int next = 0, count = 0;
    struct Frame {
        int v;
        std::size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (index[s] >= 0) continue;
        std::vector<Frame> frames{{s, 0}};
        index[s] = low[s] = next++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            if (i < d.out(v).size()) {
                int w = d.out(v)[i++];
                if (index[w] < 0) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        scc[w] = count;
                    } while (w != v);
                    ++count;
                }
                int v0 = v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v0]);
            }
        }
    }
    std::vector<std::vector<int>> comps(count);
    for (int v = 0; v < n; ++v) comps[scc[v]].push_back(v);
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool is_strong(const Digraph& d) {
    if (d.order() == 0) fail(Errc::TooSmall, "empty digraph");
    return strong_components(d).size() == 1;
}

BlockDecomposition block_decomposition(const Digraph& d) {
    const int n = d.order();
    // Underlying simple graph adjacency (a digon is one edge).
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : d.arcs())
        if (u < v || !d.has_arc(v, u)) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }

    BlockDecomposition bd;
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        num[v] = low[v] = timer++;
        int children = 0;
        for (int w : adj[v]) {
            if (w == parent) {
                parent = -2; // a simple graph has one parent edge
                continue;
            }
            if (num[w] < 0) {
                edge_stack.emplace_back(v, w);
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<int> block;
                    std::pair<int, int> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                    } while (e != std::make_pair(v, w));
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    bd.blocks.push_back(std::move(block));
                    if (parent != -1 || children >= 2) is_cut[v] = 1;
                }
            } else if (num[w] < num[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (num[s] < 0) dfs(s, -1);

    for (int v = 0; v < n; ++v)
        if (is_cut[v]) bd.cutvertices.push_back(v);
    std::sort(bd.blocks.begin(), bd.blocks.end());
    return bd;
}

bool is_biconnected(const Digraph& d) {
    if (!is_connected(d)) return false;
    auto bd = block_decomposition(d);
    return bd.cutvertices.empty();
}

bool is_eulerian(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v)
        if (d.out_degree(v) != d.in_degree(v)) return false;
    return true;
}

ContractionResult contract(const Digraph& d, const std::vector<int>& X) {
    const int n = d.order();
    if (X.empty()) fail(Errc::EmptySide, "contraction of empty set");
    std::vector<char> in_x(n, 0);
    for (int v : X) {
        if (v < 0 || v >= n) fail(Errc::OutOfRange, "contraction vertex out of range");
        in_x[v] = 1;
    }
    int count_x = static_cast<int>(std::count(in_x.begin(), in_x.end(), char(1)));
    if (count_x == n) fail(Errc::EmptySide, "contraction of the whole vertex set");

    int rep = *std::min_element(X.begin(), X.end());
    std::vector<int> map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (in_x[v] && v != rep) continue;
        map[v] = next++;
    }
    for (int v : X) map[v] = map[rep];

    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs()) {
        int a = map[u], b = map[v];
        if (a != b) arcs.emplace_back(a, b);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    int merged = map[rep];
    return {Digraph::build(next, std::move(arcs)), std::move(map), merged};
}

int delta_max(const Digraph& d) {
    int best = 0;
    for (int v = 0; v < d.order(); ++v)
        best = std::max({best, d.out_degree(v), d.in_degree(v)});
    return best;
}

bool is_acyclic(const Digraph& d) {
    const int n = d.order();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : d.arcs()) ++indeg[v];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : d.out(v))
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

bool is_directed_cycle_graph(const Digraph& d) {
    const int n = d.order();
    if (n < 2 || d.size() != n) return false;
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
    return is_connected(d);
}

bool is_symmetric_cycle(const Digraph& d) {
    const int n = d.order();
    if (n < 3 || d.size() != 2 * n) return false;
    for (auto [u, v] : d.arcs())
        if (!d.has_arc(v, u)) return false;
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) != 2) return false;
    return is_connected(d);
}

bool is_symmetric_odd_cycle(const Digraph& d) {
    return is_symmetric_cycle(d) && d.order() % 2 == 1;
}

bool is_bidirected_complete(const Digraph& d) {
    const int n = d.order();
    return d.size() == n * (n - 1) && n >= 1;
}

int wheel_hub(const Digraph& d) {
    const int n = d.order();
    if (n < 4 || d.size() != 4 * (n - 1)) return -1;
    for (auto [u, v] : d.arcs())
        if (!d.has_arc(v, u)) return -1;
    int hub = -1;
    for (int v = 0; v < n; ++v) {
        if (d.out_degree(v) == n - 1) {
            if (hub >= 0) return -1; // two universal vertices only in K4; treat as wheel below
            hub = v;
        } else if (d.out_degree(v) != 3) {
            return -1;
        }
    }
    if (hub < 0) return -1;
    std::vector<int> rim;
    for (int v = 0; v < n; ++v)
        if (v != hub) rim.push_back(v);
    auto sub = induced(d, rim);
    return is_symmetric_cycle(sub.d) ? hub : -1;
}

bool is_symmetric_odd_wheel(const Digraph& d) {
    // K4 is the odd wheel with a 3-cycle rim; every vertex is a valid hub.
    if (d.order() == 4 && is_bidirected_complete(d)) return true;
    return wheel_hub(d) >= 0 && (d.order() - 1) % 2 == 1;
}

} // namespace extremal
