#pragma once

#include <chrono>
#include <optional>

#include "extremal/certificate.hpp"
#include "extremal/digraph.hpp"

namespace extremal {

/// Optional wall-clock cutoff; exceeded deadlines surface as Errc::Timeout.
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Brute force: strong, 2-connected, max local arc-connectivity k and
/// dichromatic number k+1. Guarded by n <= 18 (BudgetExceeded).
bool is_k_extremal_oracle(const Digraph& d, int k);

/// Inverse of the directed Hajós join. (u,v,w): uw is an arc, removing v
/// and uw splits the rest into the two operand interiors. `relabel` maps
/// the labels of the rebuilt join back to the input digraph; rebuilding
/// d1, d2 with it reproduces the input arc for arc.
struct DirectedSplit {
    int u, v, w;
    Digraph d1, d2;
    std::vector<int> map1, map2; // part-local -> input
    std::vector<int> relabel;
};

/// Inverse of the parallel join. All of t,u,v,w,a,b are input labels; the
/// part digraphs use local labels with `x` the rebuilt split vertex of d_ac.
struct ParallelSplit {
    int t, u, v, w, a, b;
    Digraph d_ac, d_b;
    int x;                          // d_ac-local
    std::vector<int> ac_map, b_map; // part-local -> input; ac_map[x] == -1
    std::vector<int> relabel;
};

/// Inverse of the star tree join: hub y plus the peripheral dicycle
/// p_1 -> ... -> p_l -> p_1, one piece per cycle vertex.
struct StarSplit {
    int hub;
    std::vector<int> cycle; // p_1..p_l, input labels
    std::vector<Digraph> pieces;
    std::vector<std::vector<int>> maps;       // piece-local -> input (hub maps to y)
    std::vector<std::pair<int, int>> piece_uv; // piece-local (hub, cycle vertex)
    std::vector<int> relabel;
};

/// Each finder scans candidate tuples in lexicographic order, rebuilds the
/// join and only reports a split that reproduces the input exactly.
std::optional<DirectedSplit> find_directed_split(const Digraph& d, Deadline deadline = {});
std::optional<ParallelSplit> find_parallel_split(const Digraph& d, Deadline deadline = {});
std::optional<StarSplit> find_star_split(const Digraph& d, Deadline deadline = {});

/// Structural recognizer for the join-closed class with parameter k >= 3
/// (BadK below that): screens, base cases, then split-and-recurse. Returns
/// a replayable certificate exactly when the digraph is a member.
std::optional<Certificate> recognize_extremal(const Digraph& d, int k, Deadline deadline = {});

struct ExtremalVerdict {
    bool satisfied = false;
    int k = 0; // max local arc-connectivity
    std::optional<std::vector<int>> witness_block;
    std::optional<Certificate> certificate;
    enum class Method { Oracle, Structural } method = Method::Oracle;
};

/// Does the dichromatic number exceed the max local arc-connectivity?
/// Tests whether some block of a strong component forces it: directed
/// cycles (k=1), exhaustive check (k=2), recognizer (k>=3).
ExtremalVerdict chi_equals_lambda_plus_one(const Digraph& d, Deadline deadline = {});

} // namespace extremal
