#include "povgraph/centrality.hpp"

#include <algorithm>

namespace povgraph {

std::vector<int> degree_centrality(const SpatialGraph& g) {
  std::vector<int> deg(g.n);
  for (int i = 0; i < g.n; ++i) deg[i] = g.degree(i);
  return deg;
}

std::vector<int> k_core(const SpatialGraph& g) {
  const int n = g.n;
  std::vector<int> deg = degree_centrality(g);
  int max_deg = 0;
  for (int d : deg) max_deg = std::max(max_deg, d);

  // bucket sort nodes by remaining degree
  std::vector<int> bin(max_deg + 2, 0);
  for (int d : deg) ++bin[d];
  int start = 0;
  for (int d = 0; d <= max_deg; ++d) {
    int count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<int> vert(n), pos(n);
  for (int v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]];
    vert[pos[v]] = v;
    ++bin[deg[v]];
  }
  for (int d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
  if (max_deg >= 0) bin[0] = 0;

  std::vector<int> core = deg;
  for (int idx = 0; idx < n; ++idx) {
    const int v = vert[idx];
    core[v] = deg[v];
    for (const auto& [u, dist] : g.adj[v]) {
      (void)dist;
      if (deg[u] > deg[v]) {
        // move u one bucket down
        const int du = deg[u];
        const int pu = pos[u];
        const int pw = bin[du];
        const int w = vert[pw];
        if (u != w) {
          std::swap(vert[pu], vert[pw]);
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return core;
}

CentralityProfile centrality_profile(const SpatialGraph& g) {
  return {degree_centrality(g), k_core(g)};
}

}  // namespace povgraph
