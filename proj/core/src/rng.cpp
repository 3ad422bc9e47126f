#include "spl/rng.hpp"

namespace spl {

Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den,
                   SplitMix64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p_num, p_den)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace spl
