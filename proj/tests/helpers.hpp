#pragma once

#include <random>

#include "extremal/digraph.hpp"

namespace extremal::testing {

/// Seeded Erdos-Renyi style digraph: each ordered pair independently.
inline Digraph random_digraph(std::mt19937_64& rng, int n, double arc_prob) {
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.emplace_back(u, v);
    return Digraph::build(n, std::move(arcs));
}

/// Shortest u->v dipath as an arc list (BFS), empty when v is unreachable.
inline std::vector<Arc> shortest_dipath(const Digraph& d, int u, int v) {
    std::vector<int> prev(d.order(), -1);
    std::vector<int> queue{u};
    prev[u] = u;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : d.out(queue[i]))
            if (prev[w] < 0) {
                prev[w] = queue[i];
                queue.push_back(w);
            }
    std::vector<Arc> path;
    if (prev[v] < 0 || u == v) return path;
    for (int w = v; w != u; w = prev[w]) path.emplace_back(prev[w], w);
    return path;
}

} // namespace extremal::testing
