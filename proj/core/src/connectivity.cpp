#include "extremal/connectivity.hpp"

#include <algorithm>
#include <deque>

namespace extremal {

namespace {

// Unit-capacity residual network over the arc list.
struct FlowNet {
    struct Edge {
        int to;
        int cap;
        int rev; // index into graph[to]
    };
    std::vector<std::vector<Edge>> graph;

    explicit FlowNet(const Digraph& d) : graph(d.order()) {
        for (auto [u, v] : d.arcs()) {
            graph[u].push_back({v, 1, static_cast<int>(graph[v].size())});
            graph[v].push_back({u, 0, static_cast<int>(graph[u].size()) - 1});
        }
    }

    // One BFS augmentation; returns false when no augmenting path exists.
    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(graph.size(), {-1, -1});
        std::deque<int> queue{s};
        pred[s] = {s, -1};
        while (!queue.empty() && pred[t].first < 0) {
            int v = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < graph[v].size(); ++i) {
                const auto& e = graph[v][i];
                if (e.cap > 0 && pred[e.to].first < 0) {
                    pred[e.to] = {v, static_cast<int>(i)};
                    queue.push_back(e.to);
                }
            }
        }
        if (pred[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [p, i] = pred[v];
            graph[p][i].cap -= 1;
            graph[v][graph[p][i].rev].cap += 1;
            v = p;
        }
        return true;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (augment(s, t)) ++flow;
        return flow;
    }

    std::vector<int> residual_reachable(int s) const {
        std::vector<char> seen(graph.size(), 0);
        std::vector<int> stack{s}, out;
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.push_back(v);
            for (const auto& e : graph[v])
                if (e.cap > 0 && !seen[e.to]) seen[e.to] = 1, stack.push_back(e.to);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace

int lambda_pair(const Digraph& d, int u, int v) {
    if (u == v) fail(Errc::SameVertex, "lambda_pair with u == v");
    FlowNet net(d);
    return net.max_flow(u, v);
}

int lambda_max(const Digraph& d) {
    if (d.order() < 2) fail(Errc::TooSmall, "lambda_max needs at least two vertices");
    int best = 0;
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v)
            if (u != v) best = std::max(best, lambda_pair(d, u, v));
    return best;
}

Dicut min_dicut(const Digraph& d, int u, int v) {
    if (u == v) fail(Errc::SameVertex, "min_dicut with u == v");
    FlowNet net(d);
    net.max_flow(u, v);
    Dicut cut;
    cut.source_side = net.residual_reachable(u);
    cut.crossing_arcs = crossing_arcs(d, cut.source_side);
    return cut;
}

bool symmetric_connectivity(const Digraph& d) {
    if (d.order() < 2) fail(Errc::TooSmall, "symmetric_connectivity needs at least two vertices");
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (lambda_pair(d, u, v) != lambda_pair(d, v, u)) return false;
    return true;
}

std::vector<Arc> crossing_arcs(const Digraph& d, const std::vector<int>& X) {
    std::vector<char> in_x(d.order(), 0);
    for (int v : X) in_x[v] = 1;
    std::vector<Arc> out;
    for (auto [a, b] : d.arcs())
        if (in_x[a] && !in_x[b]) out.emplace_back(a, b);
    return out;
}

} // namespace extremal
