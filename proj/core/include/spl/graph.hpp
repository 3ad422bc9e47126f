#pragma once

#include <utility>
#include <vector>

#include "spl/errors.hpp"
#include "spl/vertex_set.hpp"

namespace spl {

// Immutable simple undirected graph on dense vertex ids 0..n-1 with bitset
// adjacency. "Removing" vertices is expressed by masking queries with a
// VertexSet; the graph itself is never rebuilt.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n,
                              const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Sorted (u < v, lexicographic) list of edges.
  std::vector<std::pair<int, int>> edge_list() const;

  VertexSet vertices() const { return VertexSet::full(n_); }

  // Common neighbourhood of the two endpoints of an edge, or of any pair.
  VertexSet common_neighbors(int u, int v) const {
    return adj_[u] & adj_[v];
  }

  // Induced subgraph on `keep`; `old_of(i)` mapping returned via out param.
  Graph induced(const VertexSet& keep, std::vector<int>* old_of = nullptr) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

// Intersection of the neighbourhoods of every member of `s`.
VertexSet common_neighbourhood(const Graph& g, const VertexSet& s);

int min_degree(const Graph& g);

// Minimum degree of g restricted to `s` (degrees counted within s).
int min_degree_within(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);

// Connected components of the subgraph induced on `within`.
std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& within);

}  // namespace spl
