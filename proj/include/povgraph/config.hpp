#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "povgraph/centrality2vec.hpp"
#include "povgraph/lgdc.hpp"

namespace povgraph {

// Flat line-oriented `key = value` config with dotted section prefixes,
// e.g. `lgdc.alpha = 0.8`. `#` starts a comment. Every random choice in a
// run flows from the seeds below; nothing reads the clock.
struct RunConfig {
  std::string dataset;
  std::string out_dir = "run";
  double threshold_km = 5.0;
  bool spherical = false;

  struct {
    int top_k = 10;
    int walks_per_node = 10;
    int walk_length = 80;
    int window = 5;
    int dim = 64;
    int epochs = 5;
    double lr = 0.025;
    std::uint64_t seed = 1;
    bool negative_sampling = false;
    int negatives = 5;
    bool include_self = true;
    int candidate_band = 0;
  } c2v;

  struct {
    double alpha = 0.8;
    int hidden = 64;
    double lr = 0.01;
    double weight_decay = 5e-4;
    int epochs = 300;
    int patience = 30;
    std::uint64_t seed = 2;
    bool class_weighted = false;
  } lgdc;

  struct {
    double train = 0.6;
    double val = 0.2;
    double test = 0.2;
    std::uint64_t seed = 3;
  } split;

  struct {
    std::vector<double> alphas = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    int n_seeds = 5;  // repeat seeds for ablation / sweep medians
  } eval;

  // radii for the homophily curve, km
  std::vector<double> analysis_radii = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

  Centrality2VecParams c2v_params() const;
  LgdcTrainParams lgdc_params() const;
  void validate() const;  // throws std::invalid_argument
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);
std::string config_to_text(const RunConfig& c);
void write_config(const RunConfig& c, const std::string& path);

// `--seed N`: replace every stage seed with a value derived from n.
void apply_seed_override(RunConfig& c, std::uint64_t n);

}  // namespace povgraph
