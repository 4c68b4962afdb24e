#include "extremal/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace extremal {

Hypergraph Hypergraph::build(int n, std::vector<std::vector<int>> hyperedges) {
    if (n < 0) fail(Errc::BadParameter, "negative vertex count");
    for (auto& e : hyperedges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() < 2) fail(Errc::TooSmall, "hyperedge below two vertices");
        if (e.front() < 0 || e.back() >= n) fail(Errc::OutOfRange, "hyperedge vertex out of range");
    }
    std::sort(hyperedges.begin(), hyperedges.end());
    if (std::adjacent_find(hyperedges.begin(), hyperedges.end()) != hyperedges.end())
        fail(Errc::DuplicateArc, "duplicate hyperedge");
    Hypergraph h;
    h.n_ = n;
    h.edges_ = std::move(hyperedges);
    return h;
}

Hypergraph dicycle_hypergraph(const Digraph& d) {
    const int n = d.order();
    if (n > 14) fail(Errc::BudgetExceeded, "subset enumeration is limited to 14 vertices");
    std::vector<std::vector<int>> edges;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<int> S;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) S.push_back(v);
        if (is_directed_cycle_graph(induced(d, S).d)) edges.push_back(std::move(S));
    }
    return Hypergraph::build(n, std::move(edges));
}

namespace {

bool colourable(const Hypergraph& h, int k) {
    const int n = h.order();
    std::vector<int> colour(n, 0);
    // Hyperedges become blocking once all their vertices share a colour;
    // check each edge when its largest vertex is assigned.
    std::vector<std::vector<int>> closing(n);
    for (int i = 0; i < h.size(); ++i) closing[h.edges()[i].back()].push_back(i);

    std::function<bool(int, int)> go = [&](int v, int used) -> bool {
        if (v == n) return true;
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            colour[v] = c;
            bool ok = true;
            for (int i : closing[v]) {
                const auto& e = h.edges()[i];
                ok = !std::all_of(e.begin(), e.end(), [&](int x) { return colour[x] == c; });
                if (!ok) break;
            }
            if (ok && go(v + 1, std::max(used, c))) return true;
        }
        colour[v] = 0;
        return false;
    };
    return go(0, 0);
}

} // namespace

int hyper_chromatic_number(const Hypergraph& h) {
    if (h.size() == 0) return 1;
    if (h.order() > 20) fail(Errc::BudgetExceeded, "colouring search is limited to 20 vertices");
    for (int k = 1;; ++k)
        if (colourable(h, k)) return k;
}

int hyper_lambda(const Hypergraph& h, int u, int v) {
    if (u == v) fail(Errc::SameVertex, "hyperpath endpoints coincide");
    if (u < 0 || v < 0 || u >= h.order() || v >= h.order())
        fail(Errc::OutOfRange, "hyperpath endpoint out of range");
    if (h.size() > 4096) fail(Errc::BudgetExceeded, "too many hyperedges");

    // Unit-capacity nodes for hyperedges (split in/out); vertices are
    // uncapacitated. Node ids: vertex x -> x; edge i -> in n+2i, out n+2i+1.
    const int n = h.order(), m = h.size();
    const int nodes = n + 2 * m;
    std::vector<std::map<int, int>> cap(nodes);
    for (int i = 0; i < m; ++i) {
        cap[n + 2 * i][n + 2 * i + 1] = 1;
        cap[n + 2 * i + 1][n + 2 * i] += 0;
        for (int x : h.edges()[i]) {
            cap[x][n + 2 * i] = m + 1;
            cap[n + 2 * i][x] += 0;
            cap[n + 2 * i + 1][x] = m + 1;
            cap[x][n + 2 * i + 1] += 0;
        }
    }
    int flow = 0;
    while (true) {
        std::vector<int> parent(nodes, -1);
        std::vector<int> queue{u};
        parent[u] = u;
        for (std::size_t qi = 0; qi < queue.size() && parent[v] < 0; ++qi)
            for (auto [w, c] : cap[queue[qi]])
                if (c > 0 && parent[w] < 0) parent[w] = queue[qi], queue.push_back(w);
        if (parent[v] < 0) break;
        for (int x = v; x != u; x = parent[x]) {
            --cap[parent[x]][x];
            ++cap[x][parent[x]];
        }
        ++flow;
    }
    return flow;
}

namespace {

bool hyperpath_exists(const Hypergraph& h, int u, int v, unsigned mask) {
    // DFS over (vertex, remaining edges): one step consumes an edge
    // containing both the current and the next vertex.
    std::function<bool(int, unsigned)> go = [&](int x, unsigned rest) -> bool {
        if (x == v) return true;
        for (int i = 0; i < h.size(); ++i) {
            if (!(rest & (1u << i))) continue;
            const auto& e = h.edges()[i];
            if (!std::binary_search(e.begin(), e.end(), x)) continue;
            for (int y : e)
                if (y != x && go(y, rest & ~(1u << i))) return true;
        }
        return false;
    };
    return go(u, mask);
}

} // namespace

int hyper_lambda_exhaustive(const Hypergraph& h, int u, int v) {
    if (u == v) fail(Errc::SameVertex, "hyperpath endpoints coincide");
    if (h.size() > 8) fail(Errc::BudgetExceeded, "exhaustive packing is limited to 8 hyperedges");
    const unsigned full = (1u << h.size()) - 1;
    std::vector<int> memo(full + 1, -1);
    std::function<int(unsigned)> best = [&](unsigned mask) -> int {
        if (memo[mask] >= 0) return memo[mask];
        int result = 0;
        for (unsigned s = mask; s > 0; s = (s - 1) & mask)
            if (hyperpath_exists(h, u, v, s))
                result = std::max(result, 1 + best(mask & ~s));
        return memo[mask] = result;
    };
    return best(full);
}

bool pairwise_intersection_check(const Hypergraph& h) {
    for (int i = 0; i < h.size(); ++i)
        for (int j = i + 1; j < h.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(h.edges()[i].begin(), h.edges()[i].end(),
                                  h.edges()[j].begin(), h.edges()[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 1) return false;
        }
    return true;
}

Hypergraph hajos_hyperjoin(const Hypergraph& h1, const std::vector<int>& e1, int v1,
                           const Hypergraph& h2, const std::vector<int>& e2, int v2,
                           bool include_v) {
    auto norm = [](std::vector<int> e) {
        std::sort(e.begin(), e.end());
        return e;
    };
    auto ne1 = norm(e1), ne2 = norm(e2);
    auto has_edge = [](const Hypergraph& h, const std::vector<int>& e) {
        return std::binary_search(h.edges().begin(), h.edges().end(), e);
    };
    if (!has_edge(h1, ne1) || !has_edge(h2, ne2))
        fail(Errc::MissingEdge, "join hyperedge absent");
    if (!std::binary_search(ne1.begin(), ne1.end(), v1) ||
        !std::binary_search(ne2.begin(), ne2.end(), v2))
        fail(Errc::VertexNotInEdge, "identified vertex not in its join hyperedge");

    const int n1 = h1.order();
    std::vector<int> map2(h2.order());
    int next = n1;
    for (int x = 0; x < h2.order(); ++x) map2[x] = x == v2 ? v1 : next++;

    std::vector<std::vector<int>> edges;
    for (const auto& e : h1.edges())
        if (e != ne1) edges.push_back(e);
    for (const auto& e : h2.edges()) {
        if (e == ne2) continue;
        std::vector<int> mapped;
        for (int x : e) mapped.push_back(map2[x]);
        edges.push_back(std::move(mapped));
    }
    std::vector<int> merged;
    for (int x : ne1)
        if (x != v1) merged.push_back(x);
    for (int x : ne2)
        if (x != v2) merged.push_back(map2[x]);
    if (include_v) merged.push_back(v1);
    std::sort(merged.begin(), merged.end());
    edges.push_back(std::move(merged));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph::build(n1 + h2.order() - 1, std::move(edges));
}

} // namespace extremal
