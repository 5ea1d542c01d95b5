#include "povgraph/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "povgraph/centrality.hpp"
#include "povgraph/centrality2vec.hpp"
#include "povgraph/experiments.hpp"
#include "povgraph/homophily.hpp"
#include "povgraph/spatial_graph.hpp"
#include "povgraph/stats.hpp"

namespace povgraph {

namespace fs = std::filesystem;

namespace {

std::string path_in(const RunConfig& c, const char* file) {
  return (fs::path(c.out_dir) / file).string();
}

void ensure_out_dir(const RunConfig& c) { fs::create_directories(c.out_dir); }

void log_line(const RunConfig& c, const std::string& line) {
  std::ofstream log(path_in(c, "pipeline.log"), std::ios::app);
  log << line << '\n';
}

Dataset load_dataset(const RunConfig& c) {
  if (c.dataset.empty()) throw std::invalid_argument("no dataset path configured");
  return load_csv(c.dataset);
}

SpatialGraph load_graph(const RunConfig& c, int n) {
  const std::string path = path_in(c, "graph.edges");
  if (!fs::exists(path))
    throw std::runtime_error("graph.edges not found in " + c.out_dir +
                             " (run build-graph first)");
  return read_edge_list(path, n, c.threshold_km);
}

// group values by poverty label; unknown labels dropped
void split_by_label(const Dataset& ds, const std::vector<int>& values,
                    std::vector<double>& poor, std::vector<double>& non_poor) {
  for (int i = 0; i < ds.size(); ++i) {
    if (ds.records[i].label == Label::Poor) poor.push_back(values[i]);
    else if (ds.records[i].label == Label::NonPoor) non_poor.push_back(values[i]);
  }
}

}  // namespace

void stage_ingest(const RunConfig& config) {
  ensure_out_dir(config);
  const Dataset ds = load_dataset(config);
  std::ostringstream line;
  line << "[ingest] dataset=" << ds.name << " villages=" << ds.size()
       << " poor=" << ds.count(Label::Poor) << " non_poor=" << ds.count(Label::NonPoor)
       << " unknown=" << ds.count(Label::Unknown);
  log_line(config, line.str());
}

void stage_build_graph(const RunConfig& config) {
  ensure_out_dir(config);
  const Dataset ds = load_dataset(config);
  const SpatialGraph g = build_graph(ds, config.threshold_km, config.spherical);
  write_edge_list(g, path_in(config, "graph.edges"));

  std::ofstream stats(path_in(config, "graph_stats.txt"));
  if (g.n >= 2) {
    const GraphStatsResult s = graph_stats(g);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "nodes %d\nedges %lld\navg_degree %.6f\nsparsity %.6e\n", g.n,
                  s.edge_count, s.avg_degree, s.sparsity);
    stats << buf;
  } else {
    stats << "nodes " << g.n << "\nedges 0\n";
  }
  std::ostringstream line;
  line << "[build-graph] threshold_km=" << config.threshold_km << " edges=" << g.edge_count();
  log_line(config, line.str());
}

void stage_analyze(const RunConfig& config) {
  ensure_out_dir(config);
  const Dataset ds = load_dataset(config);
  const SpatialGraph g = load_graph(config, ds.size());
  const CentralityProfile prof = centrality_profile(g);

  // centrality stats per measure and label group
  std::ofstream stats(path_in(config, "centrality_stats.csv"));
  stats << "measure,group,count,mean,std\n";
  std::ofstream ttest(path_in(config, "t_test.txt"));
  const struct {
    const char* name;
    const std::vector<int>& values;
  } measures[] = {{"degree", prof.degree}, {"kcore", prof.coreness}};
  char buf[200];
  for (const auto& m : measures) {
    std::vector<double> poor, non_poor;
    split_by_label(ds, m.values, poor, non_poor);
    if (poor.empty() || non_poor.empty())
      throw std::runtime_error("analysis needs both label groups present");
    const GroupStats sp = group_stats(poor);
    const GroupStats sn = group_stats(non_poor);
    std::snprintf(buf, sizeof(buf), "%s,poor,%d,%.6f,%.6f\n", m.name, sp.count, sp.mean,
                  sp.std_dev);
    stats << buf;
    std::snprintf(buf, sizeof(buf), "%s,non_poor,%d,%.6f,%.6f\n", m.name, sn.count,
                  sn.mean, sn.std_dev);
    stats << buf;
    const TTestResult t = welch_t_test(poor, non_poor);
    std::snprintf(buf, sizeof(buf), "%s: t = %.6f, df = %.3f, p = %.6e\n", m.name, t.t,
                  t.df, t.p);
    ttest << buf;
  }

  const auto curve = homophily_curve(ds, config.analysis_radii, config.spherical);
  std::ofstream hom(path_in(config, "homophily_curve.csv"));
  hom << "radius_km,poor_nb_of_poor,nonpoor_nb_of_poor,poor_nb_of_nonpoor,"
         "nonpoor_nb_of_nonpoor,poor_pct_around_poor,poor_pct_around_nonpoor\n";
  for (const auto& pt : curve) {
    std::snprintf(buf, sizeof(buf), "%.6g,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", pt.radius_km,
                  pt.poor_neighbors_of_poor, pt.nonpoor_neighbors_of_poor,
                  pt.poor_neighbors_of_nonpoor, pt.nonpoor_neighbors_of_nonpoor,
                  pt.poor_pct_around_poor, pt.poor_pct_around_nonpoor);
    hom << buf;
  }
  log_line(config, "[analyze] wrote centrality_stats.csv, t_test.txt, homophily_curve.csv");
}

void stage_embed(const RunConfig& config) {
  ensure_out_dir(config);
  const Dataset ds = load_dataset(config);
  const SpatialGraph g = load_graph(config, ds.size());
  const Matrix h = centrality2vec(g, config.c2v_params());
  write_embeddings(h, path_in(config, "embeddings.txt"));
  std::ostringstream line;
  line << "[embed] dim=" << config.c2v.dim << " walks=" << config.c2v.walks_per_node
       << "x" << config.c2v.walk_length;
  log_line(config, line.str());
}

void stage_train(const RunConfig& config) {
  ensure_out_dir(config);
  const Dataset ds = load_dataset(config);
  const SpatialGraph g = load_graph(config, ds.size());
  const Matrix h = read_embeddings(path_in(config, "embeddings.txt"));
  if (h.rows() != g.n) throw std::runtime_error("embeddings do not match graph size");
  const std::vector<int> labels = ds.class_labels();
  const Split split = stratified_split(labels, config.split.train, config.split.val,
                                       config.split.test, config.split.seed);
  LgdcTrainLog tlog;
  const LgdcModel model = lgdc_train(g, h, labels, split, config.lgdc_params(), &tlog);
  write_checkpoint(model, path_in(config, "model.ckpt"));
  std::ostringstream line;
  line << "[train] epochs_run=" << tlog.train_loss.size() << " best_epoch=" << tlog.best_epoch;
  if (!tlog.train_loss.empty()) line << " final_train_loss=" << tlog.train_loss.back();
  log_line(config, line.str());
}

void stage_evaluate(const RunConfig& config) {
  ensure_out_dir(config);
  const Dataset ds = load_dataset(config);
  const SpatialGraph g = load_graph(config, ds.size());
  const Matrix h = read_embeddings(path_in(config, "embeddings.txt"));
  const LgdcModel model = read_checkpoint(path_in(config, "model.ckpt"));
  const std::vector<int> labels = ds.class_labels();
  const Split split = stratified_split(labels, config.split.train, config.split.val,
                                       config.split.test, config.split.seed);

  const LgdcPrediction pred = lgdc_predict(model, g, h);
  std::vector<int> test_pred, test_truth;
  std::vector<double> test_prob;
  for (int i : split.test) {
    test_pred.push_back(pred.cls[i]);
    test_prob.push_back(pred.poor_prob[i]);
    test_truth.push_back(labels[i]);
  }
  const ClassificationMetrics m = compute_metrics(test_pred, test_prob, test_truth);

  std::vector<RunRecord> rows = {
      {"full", model.alpha, config.lgdc.seed, m}};
  std::ofstream csv(path_in(config, "metrics.csv"), std::ios::binary);
  csv << run_records_csv(rows);

  std::ofstream summary(path_in(config, "summary.txt"));
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "test nodes      %zu\n"
                "accuracy        %.4f\n"
                "precision       %.4f (macro)\n"
                "recall          %.4f (macro)\n"
                "f1              %.4f (macro)\n"
                "auroc           %.4f\n"
                "split           %.2f/%.2f/%.2f stratified, seed %llu\n",
                split.test.size(), m.accuracy, m.precision, m.recall, m.f1, m.auroc,
                config.split.train, config.split.val, config.split.test,
                static_cast<unsigned long long>(config.split.seed));
  summary << buf;

  std::ostringstream line;
  line << "[evaluate] accuracy=" << m.accuracy << " f1=" << m.f1 << " auroc=" << m.auroc;
  log_line(config, line.str());
}

namespace {

using StageFn = void (*)(const RunConfig&);

struct StageEntry {
  const char* name;
  StageFn fn;
};

constexpr StageEntry kStages[] = {
    {"ingest", stage_ingest},       {"build-graph", stage_build_graph},
    {"analyze", stage_analyze},     {"embed", stage_embed},
    {"train", stage_train},         {"evaluate", stage_evaluate},
};

void mark_failed(const RunConfig& config, const std::string& stage,
                 const std::string& cause) {
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  std::ofstream marker(path_in(config, "FAILED"));
  marker << stage << ": " << cause << '\n';
  log_line(config, "[" + stage + "] FAILED: " + cause);
}

void run_one(const std::string& name, StageFn fn, const RunConfig& config) {
  try {
    fn(config);
  } catch (const std::invalid_argument& e) {
    mark_failed(config, name, e.what());
    throw StageFailure(name, e.what(), true);
  } catch (const std::exception& e) {
    mark_failed(config, name, e.what());
    throw StageFailure(name, e.what(), false);
  }
}

}  // namespace

void run_stage(const std::string& name, const RunConfig& config) {
  for (const auto& s : kStages) {
    if (name == s.name) {
      run_one(s.name, s.fn, config);
      return;
    }
  }
  throw std::invalid_argument("unknown stage: " + name);
}

void run_pipeline(const RunConfig& config) {
  config.validate();
  ensure_out_dir(config);
  std::error_code ec;
  fs::remove(path_in(config, "FAILED"), ec);  // stale marker from a previous run
  write_config(config, path_in(config, "config_used.cfg"));
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& s : kStages) {
    const auto s0 = std::chrono::steady_clock::now();
    run_one(s.name, s.fn, config);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "[%s] done in %.2f s", s.name, secs);
    log_line(config, buf);
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[96];
  std::snprintf(buf, sizeof(buf), "[run] pipeline complete in %.2f s", total);
  log_line(config, buf);
}

}  // namespace povgraph
