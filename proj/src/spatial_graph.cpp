#include "povgraph/spatial_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "povgraph/geodesy.hpp"

namespace povgraph {

SpatialGraph SpatialGraph::from_edges(int n, std::vector<Edge> edges,
                                      double threshold_km) {
  if (n < 0) throw std::invalid_argument("negative node count");
  SpatialGraph g;
  g.n = n;
  g.threshold_km = threshold_km;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  g.adj.assign(n, {});
  const Edge* prev = nullptr;
  for (const Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n)
      throw std::invalid_argument("edge index out of range");
    if (e.i >= e.j) throw std::invalid_argument("edge must have i < j");
    if (prev && prev->i == e.i && prev->j == e.j)
      throw std::invalid_argument("duplicate edge");
    if (!(e.dist_km > 0.0) || !(e.dist_km < threshold_km))
      throw std::invalid_argument("edge distance outside (0, threshold)");
    g.adj[e.i].emplace_back(e.j, e.dist_km);
    g.adj[e.j].emplace_back(e.i, e.dist_km);
    prev = &e;
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  g.edges = std::move(edges);
  return g;
}

namespace {

double pair_distance(const VillageRecord& a, const VillageRecord& b, bool spherical) {
  return spherical ? haversine_km(a.lat, a.lon, b.lat, b.lon)
                   : geodesic_km(a.lat, a.lon, b.lat, b.lon);
}

}  // namespace

SpatialGraph build_graph_all_pairs(const Dataset& ds, double threshold_km,
                                   bool spherical) {
  if (!(threshold_km > 0.0))
    throw std::invalid_argument("distance threshold must be positive");
  const int n = ds.size();
  std::vector<SpatialGraph::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = pair_distance(ds.records[i], ds.records[j], spherical);
      if (d > 0.0 && d < threshold_km) edges.push_back({i, j, d});
    }
  }
  return SpatialGraph::from_edges(n, std::move(edges), threshold_km);
}

SpatialGraph build_graph(const Dataset& ds, double threshold_km, bool spherical) {
  if (!(threshold_km > 0.0))
    throw std::invalid_argument("distance threshold must be positive");
  const int n = ds.size();

  // Latitude-band prefilter: the geodesic between two points is at least the
  // meridian arc between their latitudes, so pairs further apart than the
  // threshold in latitude alone can be skipped without changing the result.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ds.records[a].lat < ds.records[b].lat;
  });
  const double band_deg = threshold_km / kMinKmPerDegLat;

  std::vector<SpatialGraph::Edge> edges;
  for (int a = 0; a < n; ++a) {
    const int i = order[a];
    const VillageRecord& ri = ds.records[i];
    for (int b = a + 1; b < n; ++b) {
      const int j = order[b];
      const VillageRecord& rj = ds.records[j];
      if (rj.lat - ri.lat > band_deg) break;
      const double d = pair_distance(ri, rj, spherical);
      if (d > 0.0 && d < threshold_km)
        edges.push_back({std::min(i, j), std::max(i, j), d});
    }
  }
  return SpatialGraph::from_edges(n, std::move(edges), threshold_km);
}

GraphStatsResult graph_stats(const SpatialGraph& g) {
  if (g.n < 2)
    throw std::invalid_argument("graph_stats: sparsity undefined for n < 2");
  GraphStatsResult s;
  s.edge_count = g.edge_count();
  const double m = static_cast<double>(s.edge_count);
  s.avg_degree = 2.0 * m / g.n;
  s.sparsity = 2.0 * m / (static_cast<double>(g.n) * (g.n - 1));
  return s;
}

void write_edge_list(const SpatialGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  char buf[80];
  for (const auto& e : g.edges) {
    std::snprintf(buf, sizeof(buf), "%d %d %.6f\n", e.i, e.j, e.dist_km);
    out << buf;
  }
}

SpatialGraph read_edge_list(const std::string& path, int n, double threshold_km) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read edge list: " + path);
  std::vector<SpatialGraph::Edge> edges;
  SpatialGraph::Edge e;
  while (in >> e.i >> e.j >> e.dist_km) edges.push_back(e);
  return SpatialGraph::from_edges(n, std::move(edges), threshold_km);
}

}  // namespace povgraph
