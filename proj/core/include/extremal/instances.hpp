#pragma once

#include <string>

#include "extremal/constructions.hpp"

namespace extremal {

/// Registered reproduction instances with pinned expected values. Each
/// claim rebuilds a concrete digraph from its recorded construction and
/// re-derives the quantities it pins.
std::vector<std::string> repro_claims();

struct ReproCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool ok = false;
};

struct ReproResult {
    std::string claim;
    std::vector<ReproCheck> checks;
    bool pass = false;
};

/// Throws BadParameter for an unregistered claim id.
ReproResult run_repro(const std::string& claim);

// The instances themselves, exposed for tests.

/// Tree join over a five-edge tree (two interior vertices, two leaves on
/// each) with bidirected-K4 pieces; peripheral order from the embedding.
Digraph instance_tree_join_valid();
/// Same pieces with an interleaved peripheral order that no embedding of
/// the tree realizes; built unchecked.
Digraph instance_tree_join_invalid();
/// Bijoin of two bidirected K4 (drops to dichromatic number 3).
Digraph instance_bijoin();
/// Extended tree join over a two-edge path whose peripheral list includes
/// the interior vertex; equals a directed join of two bidirected K4.
Digraph instance_path_join();
/// Three nested joins of bidirected-K4 pieces whose induced-dicycle
/// hypergraph has two triangles sharing two vertices.
Digraph instance_overlapping_dicycles();

} // namespace extremal
