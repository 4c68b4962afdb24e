#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "extremal/connectivity.hpp"
#include "extremal/digraph.hpp"

namespace extremal {

/// Vertex -> colour map with colours in 1..k; every colour class induces
/// an acyclic subdigraph.
struct Dicolouring {
    std::vector<int> colour; // indexed by vertex, values 1..k (0 = unassigned)
    int k = 0;
};

/// Structural description of a dicut when no colour permutation merges the
/// two side colourings: exactly one colour class on `side` touches the cut,
/// and for each opposite-side colour there is exactly one forward crossing
/// arc and at least one backward arc.
struct CutStructureReport {
    int side = 1;   // 1 or 2 (ties broken in favour of side 1)
    int colour = 0; // the unique incident colour on that side
    struct ColourArcs {
        int opposite_colour;
        Arc forward;               // the single arc from the incident class into this class
        std::vector<Arc> backward; // at least one arc back
    };
    std::vector<ColourArcs> per_colour_arcs;
};

struct BrooksVerdict {
    bool extremal_for_brooks = false;
    int k = 0; // Delta_max
    std::optional<std::vector<int>> witness_component;
};

bool is_acyclic_subset(const Digraph& d, const std::vector<int>& S);

/// Valid colouring of d, all colour classes acyclic.
bool is_valid_dicolouring(const Digraph& d, const Dicolouring& phi);

/// First k-dicolouring found by a deterministic backtracking search
/// (vertices in descending total degree, ties by index; colours in
/// increasing order with new colours introduced smallest-first).
std::optional<Dicolouring> find_dicolouring(const Digraph& d, int k);

/// Least k such that d is k-dicolourable; 0 for the empty digraph.
int dichromatic_number(const Digraph& d);

bool is_dicritical(const Digraph& d, int k);
bool is_vertex_dicritical(const Digraph& d, int k);

/// Calls fn for every valid k-dicolouring, in lexicographic order of the
/// colour vector. fn returning false stops the enumeration. Guarded by
/// k^n <= 10^8.
void enumerate_dicolourings(const Digraph& d, int k,
                            const std::function<bool(const Dicolouring&)>& fn);

/// Number of valid k-dicolourings (convenience over the enumeration).
long long count_dicolourings(const Digraph& d, int k);

/// Colour-merging across a dicut: phi1 and phi2 colour the two sides of
/// the cut (entries read only on their own side). Returns a combined
/// k-dicolouring when some colour permutation works, otherwise the
/// structural report.
std::variant<Dicolouring, CutStructureReport>
merge_across_dicut(const Digraph& d, const Dicut& cut, const Dicolouring& phi1,
                   const Dicolouring& phi2, int k);

/// With k = Delta_max(d): does some connected component force
/// dichromatic number k+1 (directed cycle / symmetric odd cycle /
/// bidirected complete graph, depending on k)?
BrooksVerdict brooks_membership(const Digraph& d);

} // namespace extremal
