#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "povgraph/metrics.hpp"
#include "povgraph/rng.hpp"

using namespace povgraph;

TEST_CASE("stratified split is proportional per class") {
  std::vector<int> labels;
  for (int i = 0; i < 100; ++i) labels.push_back(1);
  for (int i = 0; i < 300; ++i) labels.push_back(0);
  const Split s = stratified_split(labels, 0.6, 0.2, 0.2, 5);

  auto count = [&](const std::vector<int>& part, int cls) {
    int c = 0;
    for (int i : part) c += labels[i] == cls;
    return c;
  };
  CHECK(count(s.train, 1) == 60);
  CHECK(count(s.train, 0) == 180);
  CHECK(count(s.val, 1) == 20);
  CHECK(count(s.test, 1) == 20);

  // disjoint cover of all labeled nodes
  std::set<int> all;
  for (const auto* part : {&s.train, &s.val, &s.test})
    for (int i : *part) CHECK(all.insert(i).second);
  CHECK(all.size() == labels.size());
}

TEST_CASE("split is deterministic and seed-sensitive") {
  std::vector<int> labels(50, 0);
  for (int i = 0; i < 17; ++i) labels[i] = 1;
  labels[40] = -1;  // unlabeled records stay out of every part
  const Split a = stratified_split(labels, 0.6, 0.2, 0.2, 9);
  const Split b = stratified_split(labels, 0.6, 0.2, 0.2, 9);
  CHECK(a.train == b.train);
  CHECK(a.val == b.val);
  CHECK(a.test == b.test);
  const Split c = stratified_split(labels, 0.6, 0.2, 0.2, 10);
  CHECK_FALSE(a.train == c.train);
  for (int i : a.train) CHECK(i != 40);
  for (int i : a.test) CHECK(i != 40);
}

TEST_CASE("degenerate split requests are rejected") {
  std::vector<int> labels = {0, 0, 0, 0, 1, 1, 1};
  CHECK_THROWS_AS(stratified_split(labels, 1.0, 0.0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(stratified_split(labels, 0.5, 0.3, 0.3, 1), std::invalid_argument);
  std::vector<int> tiny = {0, 0, 0, 1, 1};
  CHECK_THROWS_AS(stratified_split(tiny, 0.6, 0.2, 0.2, 1), std::invalid_argument);
}

TEST_CASE("perfect predictions score one everywhere") {
  const std::vector<int> truth = {1, 0, 1, 0, 0};
  const std::vector<int> pred = truth;
  const std::vector<double> prob = {0.9, 0.1, 0.8, 0.2, 0.05};
  const ClassificationMetrics m = compute_metrics(pred, prob, truth);
  CHECK(m.accuracy == doctest::Approx(1.0));
  CHECK(m.precision == doctest::Approx(1.0));
  CHECK(m.recall == doctest::Approx(1.0));
  CHECK(m.f1 == doctest::Approx(1.0));
  CHECK(m.auroc == doctest::Approx(1.0));
}

TEST_CASE("majority-vote predictions on a 1:3 imbalance") {
  std::vector<int> truth, pred;
  std::vector<double> prob;
  for (int i = 0; i < 100; ++i) {
    truth.push_back(i < 25 ? 1 : 0);
    pred.push_back(0);
    prob.push_back(0.3);
  }
  const ClassificationMetrics m = compute_metrics(pred, prob, truth);
  CHECK(m.accuracy == doctest::Approx(0.75));
  CHECK(m.recall == doctest::Approx(0.5));  // macro: (0 + 1) / 2
  CHECK(m.precision == doctest::Approx(0.375));
  CHECK(m.auroc == doctest::Approx(0.5));  // all scores tie
}

TEST_CASE("auroc equals the all-pairs oracle, ties included") {
  Rng rng(139);
  for (int t = 0; t < 50; ++t) {
    const int n = 5 + rng.uniform_int(40);
    std::vector<int> truth(n);
    std::vector<double> scores(n);
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      truth[i] = rng.uniform() < 0.4 ? 1 : 0;
      pos += truth[i];
      // coarse grid of score values forces plenty of exact ties
      scores[i] = rng.uniform_int(6) / 5.0;
    }
    if (pos == 0 || pos == n) continue;
    CHECK(auroc(scores, truth) ==
          doctest::Approx(oracles::auroc_all_pairs(scores, truth)).epsilon(1e-12));
  }
}

TEST_CASE("auroc is invariant under strictly monotone transforms") {
  Rng rng(149);
  std::vector<int> truth;
  std::vector<double> scores;
  for (int i = 0; i < 60; ++i) {
    truth.push_back(rng.uniform() < 0.3 ? 1 : 0);
    scores.push_back(rng.normal());
  }
  truth[0] = 1;
  truth[1] = 0;
  std::vector<double> squashed(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i)
    squashed[i] = 1.0 / (1.0 + std::exp(-(3.0 * scores[i] + 1.0)));
  CHECK(auroc(scores, truth) == doctest::Approx(auroc(squashed, truth)).epsilon(1e-12));
}

TEST_CASE("metrics are invariant under a consistent permutation") {
  Rng rng(151);
  const int n = 40;
  std::vector<int> truth(n), pred(n);
  std::vector<double> prob(n);
  for (int i = 0; i < n; ++i) {
    truth[i] = rng.uniform() < 0.35 ? 1 : 0;
    pred[i] = rng.uniform() < 0.5 ? 1 : 0;
    prob[i] = rng.uniform();
  }
  truth[0] = 1;
  truth[1] = 0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<int> truth_p(n), pred_p(n);
  std::vector<double> prob_p(n);
  for (int i = 0; i < n; ++i) {
    truth_p[perm[i]] = truth[i];
    pred_p[perm[i]] = pred[i];
    prob_p[perm[i]] = prob[i];
  }
  const ClassificationMetrics a = compute_metrics(pred, prob, truth);
  const ClassificationMetrics b = compute_metrics(pred_p, prob_p, truth_p);
  CHECK(a.accuracy == doctest::Approx(b.accuracy).epsilon(1e-12));
  CHECK(a.precision == doctest::Approx(b.precision).epsilon(1e-12));
  CHECK(a.recall == doctest::Approx(b.recall).epsilon(1e-12));
  CHECK(a.f1 == doctest::Approx(b.f1).epsilon(1e-12));
  CHECK(a.auroc == doctest::Approx(b.auroc).epsilon(1e-12));
}

TEST_CASE("single-class truth is rejected") {
  const std::vector<int> truth = {1, 1, 1};
  const std::vector<int> pred = {1, 0, 1};
  const std::vector<double> prob = {0.9, 0.2, 0.8};
  CHECK_THROWS_AS(compute_metrics(pred, prob, truth), std::invalid_argument);
}

TEST_CASE("macro F1 handles empty prediction classes") {
  // everything predicted NonPoor: poor F1 collapses to zero
  const std::vector<int> truth = {1, 0, 1, 0};
  const std::vector<int> pred = {0, 0, 0, 0};
  const double f1 = macro_f1(pred, truth);
  // class 0: precision 0.5, recall 1 -> f1 2/3; class 1: 0
  CHECK(f1 == doctest::Approx(1.0 / 3.0));
}
