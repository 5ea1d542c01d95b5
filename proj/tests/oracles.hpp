#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// These deliberately avoid the production code paths they check.

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "povgraph/centrality2vec.hpp"
#include "povgraph/lgdc.hpp"
#include "povgraph/matrix.hpp"
#include "povgraph/rng.hpp"
#include "povgraph/spatial_graph.hpp"

namespace oracles {

// Coreness by definitional peeling: for each k, delete nodes with fewer than
// k remaining neighbors until a fixpoint; a node's coreness is the largest k
// it survives.
inline std::vector<int> k_core_by_peeling(const povgraph::SpatialGraph& g) {
  const int n = g.n;
  std::vector<int> core(n, 0);
  int max_deg = 0;
  for (int i = 0; i < n; ++i) max_deg = std::max(max_deg, g.degree(i));
  for (int k = 1; k <= max_deg; ++k) {
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        int deg = 0;
        for (const auto& [j, d] : g.adj[i])
          if (alive[j]) ++deg;
        if (deg < k) {
          alive[i] = false;
          changed = true;
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (alive[i]) core[i] = k;
  }
  return core;
}

// Exhaustive double loop for the directed sequence change cost.
inline double sequence_cost_double_loop(const povgraph::CentralitySequence& from,
                                        const povgraph::CentralitySequence& to) {
  double total = 0.0;
  for (int b : to) {
    double best = std::numeric_limits<double>::infinity();
    for (int a : from) {
      const double c = a >= b ? static_cast<double>(a) / b - 1.0
                              : static_cast<double>(b) / a - 1.0;
      best = std::min(best, c);
    }
    total += best;
  }
  return total;
}

// AUROC over every (positive, negative) pair, ties counting one half.
inline double auroc_all_pairs(const std::vector<double>& scores,
                              const std::vector<int>& truth) {
  double wins = 0.0;
  long long pairs = 0;
  for (std::size_t p = 0; p < scores.size(); ++p) {
    if (truth[p] != 1) continue;
    for (std::size_t q = 0; q < scores.size(); ++q) {
      if (truth[q] != 0) continue;
      ++pairs;
      if (scores[p] > scores[q]) wins += 1.0;
      else if (scores[p] == scores[q]) wins += 0.5;
    }
  }
  return wins / pairs;
}

// Dense-matrix reference for one distance-convolution layer:
// (D_self + A_alpha) H W + b with explicit n x n matrices.
inline povgraph::Matrix lgdc_layer_dense(const povgraph::SpatialGraph& g,
                                         const povgraph::Matrix& h,
                                         const povgraph::LgdcLayerParams& params,
                                         double alpha) {
  const int n = g.n;
  povgraph::Matrix p(n, n);
  for (int i = 0; i < n; ++i) {
    p(i, i) = 1.0 / std::max(g.degree(i), 1);
    for (const auto& [j, dist] : g.adj[i])
      p(i, j) = std::pow(alpha, dist) /
                (std::sqrt(static_cast<double>(g.degree(i))) *
                 std::sqrt(static_cast<double>(g.degree(j))));
  }
  povgraph::Matrix ph(n, h.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < h.cols(); ++t) ph(i, t) += p(i, j) * h(j, t);
  povgraph::Matrix out(n, params.w.cols());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < params.w.rows(); ++k)
      for (int t = 0; t < params.w.cols(); ++t) out(i, t) += ph(i, k) * params.w(k, t);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < params.w.cols(); ++t) out(i, t) += params.b[t];
  return out;
}

// Plain symmetric-normalized GCN neighbor sum, same traversal order as the
// production aggregation so alpha = 1 can be compared bitwise.
inline povgraph::Matrix gcn_aggregate(const povgraph::SpatialGraph& g,
                                      const povgraph::Matrix& h) {
  povgraph::Matrix out(g.n, h.cols());
  for (int i = 0; i < g.n; ++i) {
    if (g.adj[i].empty()) continue;
    const double inv_sqrt_i = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
    double* oi = out.row(i);
    for (const auto& [j, dist] : g.adj[i]) {
      (void)dist;
      const double w = inv_sqrt_i / std::sqrt(static_cast<double>(g.degree(j)));
      const double* hj = h.row(j);
      for (int t = 0; t < h.cols(); ++t) oi[t] += w * hj[t];
    }
  }
  return out;
}

// Random undirected graph with edge probability p and distances in
// (0.1, threshold - 0.1).
inline povgraph::SpatialGraph random_graph(int n, double p, povgraph::Rng& rng,
                                           double threshold = 5.0) {
  std::vector<povgraph::SpatialGraph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < p)
        edges.push_back({i, j, rng.uniform(0.1, threshold - 0.1)});
  return povgraph::SpatialGraph::from_edges(n, std::move(edges), threshold);
}

}  // namespace oracles
