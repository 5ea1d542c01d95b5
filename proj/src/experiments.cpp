#include "povgraph/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "povgraph/centrality2vec.hpp"
#include "povgraph/rng.hpp"
#include "povgraph/spatial_graph.hpp"

namespace povgraph {

ClassificationMetrics train_and_eval(const SpatialGraph& g, const Matrix& h,
                                     const std::vector<int>& labels,
                                     const Split& split, const LgdcTrainParams& params) {
  const LgdcModel model = lgdc_train(g, h, labels, split, params);
  const LgdcPrediction pred = lgdc_predict(model, g, h);
  std::vector<int> test_pred, test_truth;
  std::vector<double> test_prob;
  for (int i : split.test) {
    test_pred.push_back(pred.cls[i]);
    test_prob.push_back(pred.poor_prob[i]);
    test_truth.push_back(labels[i]);
  }
  return compute_metrics(test_pred, test_prob, test_truth);
}

namespace {

Matrix random_normal_features(int n, int dim, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0xfea7ULL));
  Matrix h(n, dim);
  for (std::size_t t = 0; t < h.size(); ++t) h.data()[t] = rng.normal();
  return h;
}

SpatialGraph edgeless_copy(const SpatialGraph& g) {
  return SpatialGraph::from_edges(g.n, {}, g.threshold_km);
}

struct RepeatSeeds {
  std::uint64_t c2v, lgdc, split;
};

RepeatSeeds seeds_for_repeat(const RunConfig& config, int repeat) {
  if (repeat == 0)
    return {config.c2v.seed, config.lgdc.seed, config.split.seed};
  return {mix_seed(config.c2v.seed, 100 + repeat),
          mix_seed(config.lgdc.seed, 100 + repeat),
          mix_seed(config.split.seed, 100 + repeat)};
}

}  // namespace

std::vector<RunRecord> run_ablation(const Dataset& ds, const RunConfig& config) {
  config.validate();
  const SpatialGraph g = build_graph(ds, config.threshold_km, config.spherical);
  const SpatialGraph g_empty = edgeless_copy(g);
  const std::vector<int> labels = ds.class_labels();

  std::vector<RunRecord> rows;
  for (int rep = 0; rep < config.eval.n_seeds; ++rep) {
    const RepeatSeeds seeds = seeds_for_repeat(config, rep);
    const Split split = stratified_split(labels, config.split.train, config.split.val,
                                         config.split.test, seeds.split);
    Centrality2VecParams cp = config.c2v_params();
    cp.skipgram.seed = seeds.c2v;
    const Matrix h = centrality2vec(g, cp);
    const Matrix h_rand = random_normal_features(g.n, config.c2v.dim, seeds.c2v);

    LgdcTrainParams lp = config.lgdc_params();
    lp.seed = seeds.lgdc;

    RunRecord a{"full", lp.alpha, seeds.lgdc, train_and_eval(g, h, labels, split, lp)};
    RunRecord b{"random_features", lp.alpha, seeds.lgdc,
                train_and_eval(g, h_rand, labels, split, lp)};
    RunRecord c{"no_graph", lp.alpha, seeds.lgdc,
                train_and_eval(g_empty, h, labels, split, lp)};
    rows.push_back(a);
    rows.push_back(b);
    rows.push_back(c);
  }
  return rows;
}

std::vector<RunRecord> alpha_sweep(const Dataset& ds, const RunConfig& config) {
  config.validate();
  const SpatialGraph g = build_graph(ds, config.threshold_km, config.spherical);
  const std::vector<int> labels = ds.class_labels();

  std::vector<RunRecord> rows;
  for (int rep = 0; rep < config.eval.n_seeds; ++rep) {
    const RepeatSeeds seeds = seeds_for_repeat(config, rep);
    const Split split = stratified_split(labels, config.split.train, config.split.val,
                                         config.split.test, seeds.split);
    Centrality2VecParams cp = config.c2v_params();
    cp.skipgram.seed = seeds.c2v;
    const Matrix h = centrality2vec(g, cp);

    for (double alpha : config.eval.alphas) {
      LgdcTrainParams lp = config.lgdc_params();
      lp.seed = seeds.lgdc;
      lp.alpha = alpha;
      rows.push_back({"sweep", alpha, seeds.lgdc,
                      train_and_eval(g, h, labels, split, lp)});
    }
  }
  return rows;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median: empty");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<double> median_accuracy_by_alpha(const std::vector<RunRecord>& rows,
                                             const std::vector<double>& alphas) {
  std::vector<double> out;
  out.reserve(alphas.size());
  for (double a : alphas) {
    std::vector<double> acc;
    for (const auto& r : rows)
      if (r.alpha == a) acc.push_back(r.test.accuracy);
    out.push_back(median(std::move(acc)));
  }
  return out;
}

std::string run_records_csv(const std::vector<RunRecord>& rows) {
  std::ostringstream out;
  out << "run_id,variant,alpha,seed,accuracy,precision,recall,f1,auroc\n";
  char buf[160];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RunRecord& r = rows[i];
    std::snprintf(buf, sizeof(buf), "%zu,%s,%.8g,%llu,%.6f,%.6f,%.6f,%.6f,%.6f\n", i,
                  r.variant.c_str(), r.alpha,
                  static_cast<unsigned long long>(r.seed), r.test.accuracy,
                  r.test.precision, r.test.recall, r.test.f1, r.test.auroc);
    out << buf;
  }
  return out.str();
}

}  // namespace povgraph
