#pragma once

#include <cstdint>
#include <vector>

namespace povgraph {

// Disjoint node-index sets covering all labeled nodes. Indices sorted.
struct Split {
  std::vector<int> train;
  std::vector<int> val;
  std::vector<int> test;
};

// Per-class proportional allocation over labeled nodes (labels: 0 = NonPoor,
// 1 = Poor, -1 = unlabeled/excluded). train and val take the floor of their
// share per class, test takes the remainder. Ratios must all be positive and
// sum to 1; each class needs at least 3 members.
Split stratified_split(const std::vector<int>& labels, double train_ratio,
                       double val_ratio, double test_ratio, std::uint64_t seed);

struct ClassificationMetrics {
  double accuracy = 0.0;
  double precision = 0.0;  // macro-averaged over the two classes
  double recall = 0.0;
  double f1 = 0.0;
  double auroc = 0.0;
};

// pred/truth in {0, 1}; poor_prob is the score of class 1. Precision,
// recall and F1 are macro averages (per-class value 0 when its denominator
// is empty); AUROC is the mid-rank statistic (ties count one half).
ClassificationMetrics compute_metrics(const std::vector<int>& pred,
                                      const std::vector<double>& poor_prob,
                                      const std::vector<int>& truth);

// Macro F1 alone (used for early stopping); tolerates single-class truth.
double macro_f1(const std::vector<int>& pred, const std::vector<int>& truth);

// Probability that a random positive outranks a random negative.
double auroc(const std::vector<double>& scores, const std::vector<int>& truth);

}  // namespace povgraph
