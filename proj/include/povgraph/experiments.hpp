#pragma once

#include <string>
#include <vector>

#include "povgraph/config.hpp"
#include "povgraph/dataset.hpp"
#include "povgraph/lgdc.hpp"
#include "povgraph/metrics.hpp"

namespace povgraph {

// One trained-and-evaluated configuration.
struct RunRecord {
  std::string variant;  // "full", "random_features", "no_graph", "sweep"
  double alpha = 0.0;
  std::uint64_t seed = 0;
  ClassificationMetrics test;
};

// Train on the split's train mask, early-stop on val, evaluate on test.
ClassificationMetrics train_and_eval(const SpatialGraph& g, const Matrix& h,
                                     const std::vector<int>& labels,
                                     const Split& split, const LgdcTrainParams& params);

// Ablation variants sharing the split and seed within each repeat:
//   full            Centrality2Vec features + distance convolution
//   random_features same classifier on seeded random-normal features
//   no_graph        two-layer perceptron on the embedding (edgeless graph)
std::vector<RunRecord> run_ablation(const Dataset& ds, const RunConfig& config);

// One model per alpha, identical otherwise; embeddings shared across alphas
// within a repeat seed.
std::vector<RunRecord> alpha_sweep(const Dataset& ds, const RunConfig& config);

// Median test accuracy per alpha, ordered like config.eval.alphas.
std::vector<double> median_accuracy_by_alpha(const std::vector<RunRecord>& rows,
                                             const std::vector<double>& alphas);

double median(std::vector<double> values);

// metrics.csv emission: run_id,variant,alpha,seed,accuracy,precision,recall,f1,auroc
std::string run_records_csv(const std::vector<RunRecord>& rows);

}  // namespace povgraph
