#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spl/graph.hpp"

namespace spl {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// Lines starting with '#' are comments and may appear anywhere.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Adjacency-matrix text format: first line "n", then n rows of n characters
// '0'/'1'. Must be symmetric with zero diagonal.
Graph read_adjacency_matrix(std::istream& in);
void write_adjacency_matrix(std::ostream& out, const Graph& g);

// Auto-detects the two text formats (matrix files have a single number on
// the first line, edge lists have two).
Graph read_graph_file(const std::string& path);

// Label sidecar: one "vertex label" line per vertex.
void write_labels(std::ostream& out, const std::vector<std::string>& labels);

}  // namespace spl
