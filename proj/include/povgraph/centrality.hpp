#pragma once

#include <vector>

#include "povgraph/spatial_graph.hpp"

namespace povgraph {

struct CentralityProfile {
  std::vector<int> degree;
  std::vector<int> coreness;
};

std::vector<int> degree_centrality(const SpatialGraph& g);

// Coreness of every node via minimum-degree bucket peeling, O(n + m).
std::vector<int> k_core(const SpatialGraph& g);

CentralityProfile centrality_profile(const SpatialGraph& g);

}  // namespace povgraph
