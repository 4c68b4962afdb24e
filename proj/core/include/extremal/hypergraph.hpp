#pragma once

#include "extremal/digraph.hpp"

namespace extremal {

/// Hypergraph on vertices 0..n-1; every hyperedge has at least two
/// vertices, edges are stored sorted and duplicate-free.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates and builds. Throws OutOfRange, TooSmall (edge below two
    /// vertices, after deduplicating its entries) or DuplicateArc.
    static Hypergraph build(int n, std::vector<std::vector<int>> hyperedges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

/// Hypergraph whose hyperedges are exactly the vertex subsets of d that
/// induce a directed cycle. Guarded by n <= 14.
Hypergraph dicycle_hypergraph(const Digraph& d);

/// Least k admitting a vertex colouring with no monochromatic hyperedge.
int hyper_chromatic_number(const Hypergraph& h);

/// Maximum number of hyperedge-disjoint u-v hyperpaths, via unit-capacity
/// flow on the vertex-hyperedge incidence network.
int hyper_lambda(const Hypergraph& h, int u, int v);

/// Exhaustive packing search, authoritative on tiny instances. Guarded by
/// at most 8 hyperedges.
int hyper_lambda_exhaustive(const Hypergraph& h, int u, int v);

/// True iff every pair of distinct hyperedges shares at most one vertex.
bool pairwise_intersection_check(const Hypergraph& h);

/// Delete e1 and e2, identify v1 (in e1) with v2 (in e2), and add the
/// hyperedge (e1 u e2) minus the identified vertex, keeping the merged
/// vertex in the new edge iff include_v.
Hypergraph hajos_hyperjoin(const Hypergraph& h1, const std::vector<int>& e1, int v1,
                           const Hypergraph& h2, const std::vector<int>& e2, int v2,
                           bool include_v);

} // namespace extremal
