#pragma once

#include <string>
#include <utility>
#include <vector>

#include "povgraph/dataset.hpp"

namespace povgraph {

// Undirected village graph with per-edge geodesic distance in km.
// Immutable after construction; every stored distance is in (0, threshold_km).
struct SpatialGraph {
  struct Edge {
    int i = 0;  // i < j
    int j = 0;
    double dist_km = 0.0;
  };

  int n = 0;
  double threshold_km = 0.0;
  std::vector<Edge> edges;  // sorted by (i, j)
  std::vector<std::vector<std::pair<int, double>>> adj;  // (neighbor, dist_km), sorted

  int degree(int i) const { return static_cast<int>(adj[i].size()); }
  long long edge_count() const { return static_cast<long long>(edges.size()); }

  // Builds adjacency and validates the invariants (indices in range, i < j,
  // no self loops or duplicates, distances in (0, threshold)).
  static SpatialGraph from_edges(int n, std::vector<Edge> edges, double threshold_km);
};

// Edge (i, j) present iff the geodesic distance is strictly below
// threshold_km. Uses a latitude-band prefilter that cannot change the
// result; `build_graph_all_pairs` is the plain O(n^2) reference.
SpatialGraph build_graph(const Dataset& ds, double threshold_km, bool spherical = false);
SpatialGraph build_graph_all_pairs(const Dataset& ds, double threshold_km,
                                   bool spherical = false);

struct GraphStatsResult {
  long long edge_count = 0;
  double avg_degree = 0.0;
  double sparsity = 0.0;  // 2m / (n (n-1))
};

GraphStatsResult graph_stats(const SpatialGraph& g);  // throws for n < 2

// Edge-list text dump `i j dist_km` (6 decimals), i < j, sorted, one per
// line. Used for cross-implementation diffing.
void write_edge_list(const SpatialGraph& g, const std::string& path);
SpatialGraph read_edge_list(const std::string& path, int n, double threshold_km);

}  // namespace povgraph
