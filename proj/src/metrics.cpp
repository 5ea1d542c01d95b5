#include "povgraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "povgraph/rng.hpp"

namespace povgraph {

Split stratified_split(const std::vector<int>& labels, double train_ratio,
                       double val_ratio, double test_ratio, std::uint64_t seed) {
  if (!(train_ratio > 0.0 && val_ratio > 0.0 && test_ratio > 0.0))
    throw std::invalid_argument("stratified_split: all ratios must be positive");
  if (std::abs(train_ratio + val_ratio + test_ratio - 1.0) > 1e-9)
    throw std::invalid_argument("stratified_split: ratios must sum to 1");

  std::vector<int> by_class[2];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0 || labels[i] == 1)
      by_class[labels[i]].push_back(static_cast<int>(i));
  }
  Split split;
  for (int c = 0; c < 2; ++c) {
    auto& members = by_class[c];
    const int m = static_cast<int>(members.size());
    if (m < 3)
      throw std::invalid_argument("stratified_split: class " + std::to_string(c) +
                                  " has fewer members than split parts");
    Rng rng(mix_seed(seed, 0x5b0a + c));
    rng.shuffle(members);
    const int n_train = static_cast<int>(std::floor(train_ratio * m));
    const int n_val = static_cast<int>(std::floor(val_ratio * m));
    for (int t = 0; t < m; ++t) {
      if (t < n_train)
        split.train.push_back(members[t]);
      else if (t < n_train + n_val)
        split.val.push_back(members[t]);
      else
        split.test.push_back(members[t]);
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.val.begin(), split.val.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

double auroc(const std::vector<double>& scores, const std::vector<int>& truth) {
  if (scores.size() != truth.size())
    throw std::invalid_argument("auroc: length mismatch");
  const int n = static_cast<int>(scores.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return scores[a] < scores[b]; });

  // mid-ranks over ties
  std::vector<double> rank(n);
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double mid = (static_cast<double>(i) + j) / 2.0 + 1.0;  // 1-based
    for (int k = i; k <= j; ++k) rank[order[k]] = mid;
    i = j + 1;
  }
  double pos_rank_sum = 0.0;
  long long n_pos = 0, n_neg = 0;
  for (int k = 0; k < n; ++k) {
    if (truth[k] == 1) {
      pos_rank_sum += rank[k];
      ++n_pos;
    } else {
      ++n_neg;
    }
  }
  if (n_pos == 0 || n_neg == 0)
    throw std::invalid_argument("auroc: needs both classes");
  const double u = pos_rank_sum - static_cast<double>(n_pos) * (n_pos + 1) / 2.0;
  return u / (static_cast<double>(n_pos) * n_neg);
}

namespace {

struct PerClass {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

PerClass per_class(const std::vector<int>& pred, const std::vector<int>& truth, int cls) {
  long long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const bool p = pred[i] == cls;
    const bool t = truth[i] == cls;
    if (p && t) ++tp;
    else if (p && !t) ++fp;
    else if (!p && t) ++fn;
  }
  PerClass out;
  out.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  out.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  out.f1 = out.precision + out.recall > 0.0
               ? 2.0 * out.precision * out.recall / (out.precision + out.recall)
               : 0.0;
  return out;
}

}  // namespace

double macro_f1(const std::vector<int>& pred, const std::vector<int>& truth) {
  if (pred.size() != truth.size()) throw std::invalid_argument("macro_f1: length mismatch");
  if (pred.empty()) return 0.0;
  return (per_class(pred, truth, 0).f1 + per_class(pred, truth, 1).f1) / 2.0;
}

ClassificationMetrics compute_metrics(const std::vector<int>& pred,
                                      const std::vector<double>& poor_prob,
                                      const std::vector<int>& truth) {
  if (pred.size() != truth.size() || poor_prob.size() != truth.size())
    throw std::invalid_argument("compute_metrics: length mismatch");
  if (pred.empty()) throw std::invalid_argument("compute_metrics: empty input");
  bool has0 = false, has1 = false;
  for (int t : truth) {
    if (t == 0) has0 = true;
    else if (t == 1) has1 = true;
    else throw std::invalid_argument("compute_metrics: labels must be 0 or 1");
  }
  if (!has0 || !has1)
    throw std::invalid_argument("compute_metrics: truth must contain both classes");

  ClassificationMetrics m;
  long long correct = 0;
  for (std::size_t i = 0; i < pred.size(); ++i)
    if (pred[i] == truth[i]) ++correct;
  m.accuracy = static_cast<double>(correct) / pred.size();

  const PerClass c0 = per_class(pred, truth, 0);
  const PerClass c1 = per_class(pred, truth, 1);
  m.precision = (c0.precision + c1.precision) / 2.0;
  m.recall = (c0.recall + c1.recall) / 2.0;
  m.f1 = (c0.f1 + c1.f1) / 2.0;
  m.auroc = auroc(poor_prob, truth);
  return m;
}

}  // namespace povgraph
