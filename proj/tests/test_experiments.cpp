#include <algorithm>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fixtures.hpp"
#include "povgraph/centrality2vec.hpp"
#include "povgraph/experiments.hpp"
#include "povgraph/spatial_graph.hpp"

using namespace povgraph;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.threshold_km = 5.0;
  cfg.c2v.dim = 16;
  cfg.c2v.walks_per_node = 3;
  cfg.c2v.walk_length = 20;
  cfg.c2v.window = 3;
  cfg.c2v.epochs = 2;
  cfg.c2v.top_k = 5;
  cfg.lgdc.hidden = 16;
  cfg.lgdc.epochs = 80;
  cfg.lgdc.patience = 80;
  cfg.split.train = 0.3;
  cfg.split.val = 0.2;
  cfg.split.test = 0.5;
  cfg.eval.n_seeds = 1;
  return cfg;
}

}  // namespace

TEST_CASE("median of odd and even counts") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == doctest::Approx(2.5));
  CHECK(median({5.0}) == 5.0);
  CHECK_THROWS_AS(median({}), std::invalid_argument);
}

TEST_CASE("run records serialize to the metrics CSV schema") {
  std::vector<RunRecord> rows = {{"full", 0.8, 7, {0.9, 0.8, 0.7, 0.75, 0.85}}};
  const std::string csv = run_records_csv(rows);
  CHECK(csv.find("run_id,variant,alpha,seed,accuracy,precision,recall,f1,auroc\n") == 0);
  CHECK(csv.find("0,full,0.8,7,0.900000,0.800000,0.700000,0.750000,0.850000\n") !=
        std::string::npos);
}

TEST_CASE("ablation produces the three variants with sane metrics") {
  const Dataset ds = fixtures::twin_pairs_dataset(5, 12);
  const RunConfig cfg = small_config();
  const auto rows = run_ablation(ds, cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].variant == "full");
  CHECK(rows[1].variant == "random_features");
  CHECK(rows[2].variant == "no_graph");
  for (const auto& r : rows) {
    CHECK(r.test.accuracy >= 0.0);
    CHECK(r.test.accuracy <= 1.0);
    CHECK(r.test.f1 >= 0.0);
    CHECK(r.test.f1 <= 1.0);
    CHECK(r.test.auroc >= 0.0);
    CHECK(r.test.auroc <= 1.0);
  }
}

TEST_CASE("the no-graph variant ignores the edge structure entirely") {
  const Dataset ds = fixtures::twin_pairs_dataset(9, 12);
  const RunConfig cfg = small_config();
  const auto rows = run_ablation(ds, cfg);

  // replay variant C by hand on an edgeless graph built from scratch
  const SpatialGraph g = build_graph(ds, cfg.threshold_km);
  Centrality2VecParams cp = cfg.c2v_params();
  const Matrix h = centrality2vec(g, cp);
  const std::vector<int> labels = ds.class_labels();
  const Split split = stratified_split(labels, cfg.split.train, cfg.split.val,
                                       cfg.split.test, cfg.split.seed);
  const SpatialGraph edgeless = SpatialGraph::from_edges(g.n, {}, cfg.threshold_km);
  const ClassificationMetrics m =
      train_and_eval(edgeless, h, labels, split, cfg.lgdc_params());
  CHECK(m.accuracy == rows[2].test.accuracy);
  CHECK(m.f1 == rows[2].test.f1);
  CHECK(m.auroc == rows[2].test.auroc);
}

TEST_CASE("a single-alpha sweep equals a direct train and eval") {
  const Dataset ds = fixtures::twin_pairs_dataset(13, 12);
  RunConfig cfg = small_config();
  cfg.eval.alphas = {0.7};
  const auto rows = alpha_sweep(ds, cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].alpha == 0.7);

  const SpatialGraph g = build_graph(ds, cfg.threshold_km);
  const Matrix h = centrality2vec(g, cfg.c2v_params());
  const std::vector<int> labels = ds.class_labels();
  const Split split = stratified_split(labels, cfg.split.train, cfg.split.val,
                                       cfg.split.test, cfg.split.seed);
  LgdcTrainParams lp = cfg.lgdc_params();
  lp.alpha = 0.7;
  const ClassificationMetrics m = train_and_eval(g, h, labels, split, lp);
  CHECK(m.accuracy == rows[0].test.accuracy);
  CHECK(m.f1 == rows[0].test.f1);
}

// Label agreement in this fixture dies out over ~2 km, so some decay always
// beats none; very small alpha throws the useful short edges away too.
TEST_CASE("alpha sweep peaks strictly inside the grid on short-decay data") {
  const Dataset ds = fixtures::twin_pairs_dataset(11);
  RunConfig cfg;
  cfg.threshold_km = 5.0;
  cfg.c2v.dim = 32;
  cfg.c2v.walks_per_node = 6;
  cfg.c2v.walk_length = 40;
  cfg.c2v.window = 5;
  cfg.c2v.epochs = 3;
  cfg.c2v.top_k = 10;
  cfg.lgdc.hidden = 32;
  cfg.lgdc.epochs = 300;
  cfg.lgdc.patience = 60;
  cfg.split.train = 0.3;
  cfg.split.val = 0.2;
  cfg.split.test = 0.5;
  cfg.eval.n_seeds = 5;
  const auto rows = alpha_sweep(ds, cfg);
  const auto med = median_accuracy_by_alpha(rows, cfg.eval.alphas);
  const std::size_t peak =
      std::max_element(med.begin(), med.end()) - med.begin();
  CHECK(peak > 0);
  CHECK(peak + 1 < med.size());
}
