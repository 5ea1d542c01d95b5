#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "povgraph/matrix.hpp"
#include "povgraph/spatial_graph.hpp"

namespace povgraph {

// Sorted ascending, all values >= 1 (centralities are shifted by +1 so the
// ratio cost below stays defined for degree-0 / coreness-0 nodes).
using CentralitySequence = std::vector<int>;

// Ordered sequence of shifted centralities over the node's 1-hop
// neighborhood. The node's own value is included by default; exclude_self
// gives the open-neighborhood variant.
CentralitySequence centrality_sequence(const SpatialGraph& g,
                                       const std::vector<int>& centrality,
                                       int node, bool include_self = true);

std::vector<CentralitySequence> all_sequences(const SpatialGraph& g,
                                              const std::vector<int>& centrality,
                                              bool include_self = true);

// Ratio transform cost max(a,b)/min(a,b) - 1 for shifted values a, b >= 1.
double element_cost(double a, double b);

// Directed sequence change cost: sum over elements of `to` of the cheapest
// ratio cost against any element of `from`. Not symmetric.
double sequence_cost(const CentralitySequence& from, const CentralitySequence& to);

// Per-node top-K most similar nodes under one centrality measure.
struct SimilarityGraph {
  std::vector<std::vector<int>> neighbors;  // each list sorted ascending

  int n() const { return static_cast<int>(neighbors.size()); }
};

// For each node i, the K other nodes j minimizing
// sequence_cost(sequences[i], sequences[j]), ties broken by ascending index;
// lists capped at n-1. candidate_band > 0 restricts candidates to nodes
// whose shifted self-centrality differs by at most the band (approximate
// speed mode, off by default).
SimilarityGraph build_similarity_graph(const std::vector<CentralitySequence>& sequences,
                                       const std::vector<int>& self_centrality,
                                       int top_k, int candidate_band = 0);

// Uniform random-walk transition over the union of a node's neighbor lists
// in the two similarity graphs (a node present in both counts once).
struct CombinedTransition {
  std::vector<std::vector<int>> targets;  // sorted union per node

  int n() const { return static_cast<int>(targets.size()); }
  // probability of stepping from i to j
  double prob(int i, int j) const;
};

CombinedTransition combined_transition(const SimilarityGraph& sim_degree,
                                       const SimilarityGraph& sim_core);

struct WalkCorpus {
  int n_nodes = 0;
  int walk_length = 0;
  std::vector<std::vector<int>> walks;
};

// walks_per_node walks from every node, each of walk_length nodes, sampled
// from the combined transition. A node with an empty target list restarts
// the walk at a uniformly random node. Walk (node, repeat) uses its own
// stream derived from (seed, node index, repeat), so results do not depend
// on generation order.
WalkCorpus random_walks(const CombinedTransition& t, int walks_per_node,
                        int walk_length, std::uint64_t seed);

struct SkipgramParams {
  int dim = 64;
  int window = 5;
  int epochs = 5;
  double lr = 0.025;  // linearly decayed over training
  std::uint64_t seed = 1;
  // Approximate speed mode: negative-sampling objective instead of the full
  // softmax. Off by default; the full softmax is the reference objective.
  bool negative_sampling = false;
  int negatives = 5;
};

struct SkipgramStats {
  // Mean per-pair loss after each epoch. In full-softmax mode this is the
  // exact corpus loss under the frozen end-of-epoch embeddings (costs one
  // extra pass per epoch, only computed when stats are requested); in
  // negative-sampling mode it is the running mean of the sampled objective.
  std::vector<double> epoch_loss;
};

// Initial embedding table, uniform in (-0.5/dim, 0.5/dim).
Matrix skipgram_init(int n, int dim, std::uint64_t seed);

// Skip-gram over the walk corpus with a full-softmax context probability
// shared across one embedding table. Returns the n x dim embedding matrix.
Matrix skipgram_train(const WalkCorpus& corpus, const SkipgramParams& params,
                      SkipgramStats* stats = nullptr);

// Test hooks: exact per-pair loss/gradient of the full-softmax objective,
// -log P(context | center) with P from softmax over every embedding row.
double skipgram_pair_loss(const Matrix& h, int center, int context);
void skipgram_pair_gradient(const Matrix& h, int center, int context, Matrix& grad);
// Softmax distribution over all nodes for a center row.
std::vector<double> skipgram_softmax(const Matrix& h, int center);

// Text persistence: first line `n d`, then one row per node, 8 significant
// digits, space separated.
void write_embeddings(const Matrix& h, const std::string& path);
Matrix read_embeddings(const std::string& path);

struct Centrality2VecParams {
  int top_k = 10;
  int walks_per_node = 10;
  int walk_length = 80;
  bool include_self = true;
  int candidate_band = 0;
  SkipgramParams skipgram;
};

// Full pipeline: degree/coreness sequences -> two similarity graphs ->
// combined walks -> skip-gram embedding.
Matrix centrality2vec(const SpatialGraph& g, const Centrality2VecParams& params,
                      SkipgramStats* stats = nullptr);

}  // namespace povgraph
