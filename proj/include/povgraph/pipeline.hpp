#pragma once

#include <stdexcept>
#include <string>

#include "povgraph/config.hpp"

namespace povgraph {

// A stage failure, annotated with the stage name for CLI reporting.
// `validation` distinguishes bad input/config from runtime failures.
struct StageFailure : std::runtime_error {
  StageFailure(const std::string& stage_name, const std::string& cause, bool is_validation)
      : std::runtime_error("stage " + stage_name + ": " + cause),
        stage(stage_name),
        validation(is_validation) {}

  std::string stage;
  bool validation;
};

// Stages communicate exclusively through files in config.out_dir, so running
// them one by one in a shared directory is identical to run_pipeline:
//   ingest       validates the dataset (no artifact)
//   build-graph  graph.edges, graph_stats.txt
//   analyze      centrality_stats.csv, t_test.txt, homophily_curve.csv
//   embed        embeddings.txt
//   train        model.ckpt
//   evaluate     metrics.csv, summary.txt
// run_pipeline additionally writes config_used.cfg and pipeline.log up front
// and leaves a FAILED marker (stage + cause) behind on error.
void stage_ingest(const RunConfig& config);
void stage_build_graph(const RunConfig& config);
void stage_analyze(const RunConfig& config);
void stage_embed(const RunConfig& config);
void stage_train(const RunConfig& config);
void stage_evaluate(const RunConfig& config);

void run_pipeline(const RunConfig& config);

// Wraps a single stage with the FAILED-marker bookkeeping used by the CLI.
void run_stage(const std::string& name, const RunConfig& config);

}  // namespace povgraph
