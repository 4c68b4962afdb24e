#pragma once

#include <string>

#include "extremal/constructions.hpp"

namespace extremal {

/// Recursive build recipe for a member of a join-closed class. Replaying a
/// certificate reproduces the certified digraph arc for arc: each node
/// rebuilds its construction from the children's replayed digraphs and then
/// applies `relabel` (constructed label -> certified label).
struct Certificate {
    enum class Kind {
        BaseComplete,          // param = number of vertices
        BaseOddWheel,          // param = l, rim length 2l+1
        BaseDirectedCycle,     // param = number of vertices
        BaseSymmetricOddCycle, // param = l, cycle length 2l+1
        DirectedJoin,          // args = {u, v1, v2, w}
        BidirectedJoin,        // args = {u, v1, v2, w}
        Bijoin,                // args = {t, a1, w, v, a2, u}
        ParallelJoin,          // args = {x, t, u, v, w, a, b}; children = {d_ac, d_b}
        StarJoin,              // star tree join; children in cycle order, piece_uv = (hub, leaf)
        TreeJoin,              // general embedded tree join
        ExtendedTreeJoin,      // tree join with a partial Eulerian peripheral list
        TwoTreeJoin,           // tree join with digon edges flagged in b_edges
    };

    Kind kind = Kind::BaseComplete;
    int param = 0;
    std::vector<Certificate> children;
    std::vector<int> args; // join vertices, in the children's certified labels

    // Tree-join payload (TreeJoin / ExtendedTreeJoin / TwoTreeJoin / StarJoin).
    EmbeddedTree tree;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::pair<int, int>> piece_uv; // per piece: local (u, v)
    std::vector<int> peripheral;
    std::vector<int> b_edges; // edge indices realised as digons (TwoTreeJoin)

    std::vector<int> relabel; // constructed label -> certified label; empty = identity
};

/// Rebuilds the certified digraph; throws the underlying construction
/// errors (or InvalidInput for a malformed certificate).
Digraph replay(const Certificate& c);

/// True iff replay(c) == d.
bool certifies(const Certificate& c, const Digraph& d);

std::string certificate_to_json(const Certificate& c, bool pretty = true);
Certificate certificate_from_json(const std::string& text); // throws ParseError

} // namespace extremal
