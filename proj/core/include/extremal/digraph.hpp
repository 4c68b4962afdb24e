#pragma once

#include <utility>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

using Arc = std::pair<int, int>;

/// Loop-free simple digraph on vertices 0..n-1. Arc set has set semantics
/// with deterministic (sorted) iteration order. Values are immutable after
/// construction; all operations below are pure.
class Digraph {
public:
    Digraph() = default;

    /// Validates and builds. Throws LoopArc, DuplicateArc or OutOfRange.
    static Digraph build(int n, std::vector<Arc> arcs);

    int order() const { return n_; }
    int size() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    bool has_arc(int u, int v) const;
    bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    Digraph with_arc(int u, int v) const;
    Digraph without_arc(int u, int v) const;
    Digraph with_digon(int u, int v) const;
    Digraph without_digon(int u, int v) const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_; // sorted, unique
    std::vector<std::vector<int>> out_, in_;

    void rebuild_adjacency();
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks; // each sorted
    std::vector<int> cutvertices;         // sorted
};

struct ContractionResult {
    Digraph d;
    std::vector<int> vertex_map; // old vertex -> new vertex
    int merged;                  // the vertex X was contracted into
};

struct InducedSubdigraph {
    Digraph d;
    std::vector<int> vertices; // new vertex i was old vertices[i]
};

/// Induced subdigraph on S (any order; result vertices follow sorted S).
InducedSubdigraph induced(const Digraph& d, std::vector<int> S);

/// Connected components of the underlying undirected graph.
std::vector<std::vector<int>> connected_components(const Digraph& d);
bool is_connected(const Digraph& d);

/// Strong components (each sorted, listed in order of smallest vertex).
std::vector<std::vector<int>> strong_components(const Digraph& d);
bool is_strong(const Digraph& d);

/// Blocks and cutvertices of the underlying graph. Isolated vertices are
/// not part of any block.
BlockDecomposition block_decomposition(const Digraph& d);
bool is_biconnected(const Digraph& d);

/// d+(v) == d-(v) for every vertex.
bool is_eulerian(const Digraph& d);

/// Contract the nonempty proper subset X into a single vertex. Arcs are
/// deduplicated and loops dropped; labels are compacted to 0..n'-1.
ContractionResult contract(const Digraph& d, const std::vector<int>& X);

/// max over v of max(d+(v), d-(v)).
int delta_max(const Digraph& d);

/// True iff d (the whole digraph) has no directed cycle.
bool is_acyclic(const Digraph& d);

// Shape predicates used by the Brooks test and the recognizer.
bool is_directed_cycle_graph(const Digraph& d);  // a single dicycle covering all vertices
bool is_symmetric_cycle(const Digraph& d);       // bidirected cycle on >= 3 vertices
bool is_symmetric_odd_cycle(const Digraph& d);
bool is_bidirected_complete(const Digraph& d);   // all n(n-1) ordered pairs present
bool is_symmetric_odd_wheel(const Digraph& d);   // bidirected odd cycle plus bidirected hub
/// Hub vertex of a symmetric wheel, or -1 when d is not one.
int wheel_hub(const Digraph& d);

} // namespace extremal
