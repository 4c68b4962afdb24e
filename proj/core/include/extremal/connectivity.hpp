#pragma once

#include "extremal/digraph.hpp"

namespace extremal {

/// An ordered dicut (X, V-X) together with its crossing arc set.
struct Dicut {
    std::vector<int> source_side;   // X, sorted
    std::vector<Arc> crossing_arcs; // exactly the arcs from X to V-X, sorted
};

/// Local arc-connectivity: maximum number of pairwise arc-disjoint u->v
/// dipaths, computed as unit-capacity max-flow (BFS augmenting paths).
int lambda_pair(const Digraph& d, int u, int v);

/// max over all ordered pairs of lambda_pair. Requires n >= 2.
int lambda_max(const Digraph& d);

/// Minimum dicut separating u from v. The source side is the set of
/// vertices reachable from u in the final residual network, which makes
/// the returned cut canonical.
Dicut min_dicut(const Digraph& d, int u, int v);

/// lambda(x,y) == lambda(y,x) for all pairs.
bool symmetric_connectivity(const Digraph& d);

/// Crossing arcs of an ordered bipartition (helper shared with tests).
std::vector<Arc> crossing_arcs(const Digraph& d, const std::vector<int>& X);

} // namespace extremal
