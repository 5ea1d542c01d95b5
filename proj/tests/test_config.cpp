#include <stdexcept>

#include <doctest.h>

#include "povgraph/config.hpp"

using namespace povgraph;

TEST_CASE("parse a config file with comments and spacing") {
  const std::string text =
      "# pipeline settings\n"
      "dataset = data/villages.csv\n"
      "out = runs/a\n"
      "graph.threshold_km = 4.5\n"
      "\n"
      "c2v.dim = 48   # embedding width\n"
      "c2v.seed = 17\n"
      "lgdc.alpha = 0.65\n"
      "split.train = 0.5\n"
      "split.val = 0.25\n"
      "split.test = 0.25\n"
      "eval.alphas = 0.5, 0.75, 1.0\n";
  const RunConfig c = parse_config_text(text);
  CHECK(c.dataset == "data/villages.csv");
  CHECK(c.out_dir == "runs/a");
  CHECK(c.threshold_km == doctest::Approx(4.5));
  CHECK(c.c2v.dim == 48);
  CHECK(c.c2v.seed == 17);
  CHECK(c.lgdc.alpha == doctest::Approx(0.65));
  CHECK(c.split.train == doctest::Approx(0.5));
  CHECK(c.eval.alphas == std::vector<double>{0.5, 0.75, 1.0});
  // untouched keys keep their defaults
  CHECK(c.c2v.walks_per_node == 10);
  CHECK(c.lgdc.hidden == 64);
}

TEST_CASE("serialized config round-trips") {
  RunConfig c;
  c.dataset = "x.csv";
  c.out_dir = "out";
  c.threshold_km = 7.25;
  c.c2v.dim = 24;
  c.c2v.negative_sampling = true;
  c.c2v.include_self = false;
  c.lgdc.alpha = 0.45;
  c.lgdc.weight_decay = 1e-3;
  c.split.seed = 99;
  c.eval.alphas = {0.1, 0.9};
  c.eval.n_seeds = 3;
  c.analysis_radii = {0.5, 1.5};
  const RunConfig back = parse_config_text(config_to_text(c));
  CHECK(back.dataset == c.dataset);
  CHECK(back.threshold_km == c.threshold_km);
  CHECK(back.c2v.dim == c.c2v.dim);
  CHECK(back.c2v.negative_sampling == c.c2v.negative_sampling);
  CHECK(back.c2v.include_self == c.c2v.include_self);
  CHECK(back.lgdc.alpha == c.lgdc.alpha);
  CHECK(back.lgdc.weight_decay == c.lgdc.weight_decay);
  CHECK(back.split.seed == c.split.seed);
  CHECK(back.eval.alphas == c.eval.alphas);
  CHECK(back.eval.n_seeds == c.eval.n_seeds);
  CHECK(back.analysis_radii == c.analysis_radii);
}

TEST_CASE("bad configs are rejected with clear messages") {
  CHECK_THROWS_AS(parse_config_text("mystery.key = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("c2v.dim\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("c2v.dim = twelve\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("graph.threshold_km = -2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("lgdc.alpha = 1.5\n"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_config_text("split.train = 0.9\nsplit.val = 0.2\nsplit.test = 0.2\n"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("analysis.radii = 3, 1\n"), std::invalid_argument);
}

TEST_CASE("the seed override rewires every stage seed") {
  RunConfig c;
  const std::uint64_t c2v0 = c.c2v.seed, lgdc0 = c.lgdc.seed, split0 = c.split.seed;
  apply_seed_override(c, 424242);
  CHECK(c.c2v.seed != c2v0);
  CHECK(c.lgdc.seed != lgdc0);
  CHECK(c.split.seed != split0);
  // distinct per stage, deterministic in the override value
  CHECK(c.c2v.seed != c.lgdc.seed);
  CHECK(c.lgdc.seed != c.split.seed);
  RunConfig d;
  apply_seed_override(d, 424242);
  CHECK(d.c2v.seed == c.c2v.seed);
  CHECK(d.lgdc.seed == c.lgdc.seed);
  CHECK(d.split.seed == c.split.seed);
}
