#pragma once

#include <string>

#include "extremal/dicolouring.hpp"
#include "extremal/digraph.hpp"
#include "extremal/hypergraph.hpp"

namespace extremal {

/// Text format: '#' comment lines, header "d <n> <m>", then m lines
/// "a <u> <v>". The writer emits arcs in sorted order, so write/parse is
/// bit-exact. Duplicate and loop arcs are parse errors.
std::string write_digraph(const Digraph& d);
Digraph parse_digraph(const std::string& text); // throws ParseError

/// Hypergraph format: header "h <n> <m>", then m lines "e <v1> <v2> ...".
std::string write_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(const std::string& text);

/// Colouring format: one line "c <v> <colour>" per vertex.
std::string write_dicolouring(const Dicolouring& phi);
Dicolouring parse_dicolouring(const std::string& text);

/// DOT export; digons are rendered as one edge with dir=both.
std::string to_dot(const Digraph& d);

std::string read_file(const std::string& path);  // throws ParseError on IO failure
void write_file(const std::string& path, const std::string& content);

} // namespace extremal
