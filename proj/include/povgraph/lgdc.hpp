#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "povgraph/matrix.hpp"
#include "povgraph/metrics.hpp"
#include "povgraph/spatial_graph.hpp"

namespace povgraph {

// One graph-distance-convolution layer: out = (self + aggregate) W + b.
struct LgdcLayerParams {
  Matrix w;               // d_in x d_out
  std::vector<double> b;  // d_out
};

struct LgdcModel {
  std::vector<LgdcLayerParams> layers;  // default 2: d -> hidden, hidden -> 2
  double alpha = 0.8;                   // distance decay in [0, 1]

  int in_dim() const { return layers.front().w.rows(); }
  int out_dim() const { return layers.back().w.cols(); }
};

// Distance-decayed neighbor sum for one node:
//   sum_j alpha^dist_ij / (sqrt(|N_i|) sqrt(|N_j|)) h_j
// Empty neighborhoods give the zero vector. alpha = 1 reduces to the plain
// symmetric-normalized GCN sum.
std::vector<double> aggregate_node(const SpatialGraph& g, const Matrix& h, int node,
                                   double alpha);

// Batch version of aggregate_node over all nodes.
Matrix aggregate(const SpatialGraph& g, const Matrix& h, double alpha);

// Self term plus aggregation: (1/max(|N_i|,1)) h_i + aggregate(g, h, i).
Matrix propagate(const SpatialGraph& g, const Matrix& h, double alpha);

// One layer without activation: propagate(g, h) W + b.
Matrix layer_forward(const SpatialGraph& g, const Matrix& h,
                     const LgdcLayerParams& params, double alpha);

// Full forward pass to logits; ReLU between layers, none after the last.
Matrix lgdc_logits(const LgdcModel& model, const SpatialGraph& g, const Matrix& h);

// Training objective: mean softmax cross-entropy over mask nodes plus
// 0.5 * weight_decay * sum ||W||^2 (weights only, biases excluded).
// labels: 0 = NonPoor, 1 = Poor, -1 = ignore. class_weighted reweights each
// node by the inverse frequency of its class inside the mask.
double lgdc_loss(const LgdcModel& model, const SpatialGraph& g, const Matrix& h,
                 const std::vector<int>& labels, const std::vector<int>& mask,
                 double weight_decay, bool class_weighted = false);

// Analytic gradients of lgdc_loss in the same layout as the model layers.
std::vector<LgdcLayerParams> lgdc_gradients(const LgdcModel& model,
                                            const SpatialGraph& g, const Matrix& h,
                                            const std::vector<int>& labels,
                                            const std::vector<int>& mask,
                                            double weight_decay,
                                            bool class_weighted = false);

struct LgdcTrainParams {
  double alpha = 0.8;
  int hidden = 64;
  double lr = 0.01;
  double weight_decay = 5e-4;
  int epochs = 300;
  int patience = 30;  // early stop on validation macro-F1
  std::uint64_t seed = 2;
  bool class_weighted = false;
};

struct LgdcTrainLog {
  std::vector<double> train_loss;
  std::vector<double> val_f1;
  int best_epoch = -1;
};

LgdcModel lgdc_init(int in_dim, int hidden, double alpha, std::uint64_t seed);

// Adam training with early stopping on validation macro-F1. Deterministic
// given the seed. Zero epochs returns the initialized model.
LgdcModel lgdc_train(const SpatialGraph& g, const Matrix& h,
                     const std::vector<int>& labels, const Split& split,
                     const LgdcTrainParams& params, LgdcTrainLog* log = nullptr);

struct LgdcPrediction {
  std::vector<int> cls;          // 0 = NonPoor, 1 = Poor; logit ties go to NonPoor
  std::vector<double> poor_prob; // softmax probability of the Poor class
};

LgdcPrediction lgdc_predict(const LgdcModel& model, const SpatialGraph& g,
                            const Matrix& h);

// Text checkpoint: header `layers alpha`, then per layer `d_in d_out`,
// W row-major and b, 8 significant digits.
void write_checkpoint(const LgdcModel& model, const std::string& path);
LgdcModel read_checkpoint(const std::string& path);

}  // namespace povgraph
