#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "extremal/digraph.hpp"

namespace extremal {

// ---------------------------------------------------------------------------
// Base digraphs
// ---------------------------------------------------------------------------

enum class BaseKind { Complete, OddWheel, DirectedCycle, SymmetricOddCycle };

/// Bidirected complete digraph on n vertices (any n >= 1).
Digraph bidirected_complete(int n);
/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(int n);
/// Bidirected cycle on n >= 3 vertices.
Digraph symmetric_cycle(int n);
/// Bidirected odd wheel: rim 0..2l, hub 2l+1 joined to the rim by digons.
Digraph symmetric_odd_wheel(int l);

/// Canonical base families. Complete(p) needs p >= 4, OddWheel(l) l >= 1,
/// DirectedCycle(n) n >= 2, SymmetricOddCycle(l) l >= 1.
Digraph base(BaseKind kind, int parameter);

// ---------------------------------------------------------------------------
// Pairwise joins
// ---------------------------------------------------------------------------

/// Result of a two-operand join: vertices of the left operand keep their
/// labels (the merged vertex takes the left label), the right operand's
/// remaining vertices are appended in increasing order.
struct JoinResult {
    Digraph d;
    std::vector<int> map1, map2; // operand-local vertex -> joined vertex
};

/// Delete u->v1 and v2->w, identify v1 with v2, add the arc u->w.
JoinResult directed_hajos_join(const Digraph& d1, int u, int v1,
                               const Digraph& d2, int v2, int w);

/// Delete the digons [u,v1] and [v2,w], identify v1 with v2, add [u,w].
JoinResult bidirected_hajos_join(const Digraph& d1, int u, int v1,
                                 const Digraph& d2, int v2, int w);

/// Delete t->a1, a1->w, v->a2, a2->u, identify a1 with a2, add t->u and
/// v->w. t==w and/or u==v give the degenerate cases; t==w and u==v is the
/// bidirected join.
JoinResult hajos_bijoin(const Digraph& d1, int t, int a1, int w,
                        const Digraph& d2, int v, int a2, int u);

// ---------------------------------------------------------------------------
// Tree joins
// ---------------------------------------------------------------------------

/// Tree with a rotation system (circular neighbour order per vertex),
/// standing in for a plane embedding.
struct EmbeddedTree {
    int n = 0;
    std::vector<std::vector<int>> rotation;

    bool is_leaf(int v) const { return rotation[v].size() == 1; }
    std::vector<int> leaves() const;
    std::vector<std::pair<int, int>> edge_list() const; // sorted, u < v
    void validate() const;                              // throws BadParameter
};

/// Circular vertex list of the boundary walk of the doubled tree, starting
/// from the lexicographically smallest (leaf, neighbour) dart. Length is
/// twice the number of edges; each vertex appears deg(v) times.
std::vector<int> boundary_walk(const EmbeddedTree& t);

struct TreePiece {
    Digraph d;
    int u = 0, v = 0; // piece-local labels of the junction endpoints
};

struct TreeJoinSpec {
    EmbeddedTree tree;
    std::vector<std::pair<int, int>> edges; // edge i = (u_i, v_i), tree labels
    std::vector<TreePiece> pieces;          // pieces[i].u plays u_i, .v plays v_i
    std::vector<int> peripheral;            // circular list of tree vertices
};

enum class PeripheralMode { LeavesOnly, PartialEulerian };

/// LeavesOnly: the peripheral list equals the leaf subsequence of the
/// boundary walk, up to rotation. PartialEulerian: it is a circular sublist
/// of the boundary walk containing every leaf and each non-leaf at most once.
bool validate_peripheral(const TreeJoinSpec& spec, PeripheralMode mode);

/// Tree join result: tree vertices keep their labels 0..t-1, piece
/// interiors are appended piece by piece.
struct TreeJoinResult {
    Digraph d;
    std::vector<std::vector<int>> piece_maps; // piece-local -> joined
};

TreeJoinResult hajos_tree_join(const TreeJoinSpec& spec);
TreeJoinResult extended_hajos_tree_join(const TreeJoinSpec& spec);

/// Same construction with no peripheral-order validation (used to build
/// deliberately invalid orderings for comparison).
TreeJoinResult tree_join_unchecked(const TreeJoinSpec& spec);

/// 2-Hajós tree join: edges flagged in is_b_edge become digons instead of
/// pieces; every leaf-to-leaf path must use an even number of B-edges.
/// pieces[i] is ignored when is_b_edge[i] is set.
TreeJoinResult two_hajos_tree_join(const TreeJoinSpec& spec, const std::vector<bool>& is_b_edge);

// ---------------------------------------------------------------------------
// Parallel join
// ---------------------------------------------------------------------------

/// d_ac is two lobes meeting at x, carrying the crossing arcs t->u and
/// v->w (t,w on one side of x, u,v on the other). The join splits x into
/// two copies and glues d_b minus its digon [a,b] between them.
struct ParallelJoinResult {
    Digraph d;
    std::vector<int> ac_map; // d_ac-local -> joined; ac_map[x] == -1
    std::vector<int> b_map;  // d_b-local -> joined
};

ParallelJoinResult parallel_hajos_join(const Digraph& d_ac, int x, int t, int u, int v, int w,
                                       const Digraph& d_b, int a, int b);

// ---------------------------------------------------------------------------
// Random members of the join-closed classes
// ---------------------------------------------------------------------------

struct Certificate;

struct GeneratedMember {
    Digraph d;
    // Owned elsewhere to keep this header light; see certificate.hpp.
    std::shared_ptr<Certificate> certificate;
};

/// Seeded random composition of base digraphs under directed Hajós joins
/// and Hajós (star) tree joins; deterministic per seed. Joins that would
/// push the order past max_order are skipped.
GeneratedMember random_member(int k, int join_budget, std::uint64_t seed, int max_order = 16);

/// Seeded random 2-Hajós tree join (pieces are small symmetric odd cycles).
Digraph random_two_tree_join(std::uint64_t seed, int max_order = 12);

} // namespace extremal
