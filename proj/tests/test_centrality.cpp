#include <algorithm>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "povgraph/centrality.hpp"
#include "povgraph/rng.hpp"

using namespace povgraph;

namespace {

SpatialGraph triangle() {
  return SpatialGraph::from_edges(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}, 5.0);
}

SpatialGraph star(int leaves) {
  std::vector<SpatialGraph::Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return SpatialGraph::from_edges(leaves + 1, std::move(edges), 5.0);
}

SpatialGraph path(int n) {
  std::vector<SpatialGraph::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return SpatialGraph::from_edges(n, std::move(edges), 5.0);
}

}  // namespace

TEST_CASE("degree centrality on small graphs") {
  CHECK(degree_centrality(triangle()) == std::vector<int>{2, 2, 2});
  const auto star_deg = degree_centrality(star(4));
  CHECK(star_deg == std::vector<int>{4, 1, 1, 1, 1});
}

TEST_CASE("coreness on small graphs") {
  CHECK(k_core(triangle()) == std::vector<int>{2, 2, 2});
  CHECK(k_core(path(5)) == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(k_core(star(4)) == std::vector<int>{1, 1, 1, 1, 1});
  // isolated node has coreness 0
  const SpatialGraph g = SpatialGraph::from_edges(3, {{0, 1, 1.0}}, 5.0);
  CHECK(k_core(g) == std::vector<int>{1, 1, 0});
}

TEST_CASE("coreness never exceeds degree") {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const SpatialGraph g = oracles::random_graph(40, 0.1, rng);
    const CentralityProfile prof = centrality_profile(g);
    for (int i = 0; i < g.n; ++i) CHECK(prof.coreness[i] <= prof.degree[i]);
  }
}

TEST_CASE("coreness equals the definitional peeling oracle") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const int n = 5 + rng.uniform_int(46);
    const SpatialGraph g = oracles::random_graph(n, 0.1, rng);
    CHECK(k_core(g) == oracles::k_core_by_peeling(g));
  }
}

TEST_CASE("coreness is invariant under relabeling") {
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    const int n = 20;
    const SpatialGraph g = oracles::random_graph(n, 0.15, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<SpatialGraph::Edge> edges;
    for (const auto& e : g.edges) {
      const int a = perm[e.i], b = perm[e.j];
      edges.push_back({std::min(a, b), std::max(a, b), e.dist_km});
    }
    const SpatialGraph h = SpatialGraph::from_edges(n, std::move(edges), g.threshold_km);
    const auto core_g = k_core(g);
    const auto core_h = k_core(h);
    for (int i = 0; i < n; ++i) CHECK(core_g[i] == core_h[perm[i]]);
  }
}
