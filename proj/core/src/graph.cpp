#include "spl/graph.hpp"

#include <string>

namespace spl {

Graph Graph::from_edge_list(int n,
                            const std::vector<std::pair<int, int>>& edges) {
  require(n >= 0 && n <= kMaxVertices, Errc::too_large,
          "graph order must be in [0, " + std::to_string(kMaxVertices) + "]");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, Errc::out_of_range,
            "edge endpoint outside 0.." + std::to_string(n - 1));
    require(u != v, Errc::self_loop, "self-loop at " + std::to_string(u));
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  for (int v = 0; v < n; ++v) g.m_ += g.adj_[v].count();
  g.m_ /= 2;
  return g;
}

Graph Graph::complete(int n) {
  require(n >= 0 && n <= kMaxVertices, Errc::too_large, "order over cap");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet::full(n));
  for (int v = 0; v < n; ++v) g.adj_[v].reset(v);
  g.m_ = n * (n - 1) / 2;
  return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* old_of) const {
  std::vector<int> ids = keep.to_vector();
  std::vector<int> new_id(n_, -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) new_id[ids[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int u : ids)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      if (new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
  if (old_of) *old_of = ids;
  return from_edge_list(static_cast<int>(ids.size()), edges);
}

VertexSet common_neighbourhood(const Graph& g, const VertexSet& s) {
  require(s.any(), Errc::empty_query, "common neighbourhood of empty set");
  VertexSet acc = VertexSet::full(g.order());
  for (int v = s.first(); v >= 0; v = s.next(v)) acc &= g.neighbors(v);
  return acc;
}

int min_degree(const Graph& g) {
  require(g.order() >= 1, Errc::empty_graph, "min degree of empty graph");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int min_degree_within(const Graph& g, const VertexSet& s) {
  int best = kMaxVertices;
  for (int v = s.first(); v >= 0; v = s.next(v))
    best = std::min(best, g.neighbors(v).intersection_count(s));
  return best == kMaxVertices ? 0 : best;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (left.any()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.set(left.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet nxt;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v))
        nxt |= g.neighbors(v);
      nxt &= left;
      nxt -= comp;
      frontier = nxt;
    }
    comps.push_back(comp);
    left -= comp;
  }
  return comps;
}

}  // namespace spl
