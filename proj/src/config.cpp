#include "povgraph/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "povgraph/rng.hpp"

namespace povgraph {

Centrality2VecParams RunConfig::c2v_params() const {
  Centrality2VecParams p;
  p.top_k = c2v.top_k;
  p.walks_per_node = c2v.walks_per_node;
  p.walk_length = c2v.walk_length;
  p.include_self = c2v.include_self;
  p.candidate_band = c2v.candidate_band;
  p.skipgram.dim = c2v.dim;
  p.skipgram.window = c2v.window;
  p.skipgram.epochs = c2v.epochs;
  p.skipgram.lr = c2v.lr;
  p.skipgram.seed = c2v.seed;
  p.skipgram.negative_sampling = c2v.negative_sampling;
  p.skipgram.negatives = c2v.negatives;
  return p;
}

LgdcTrainParams RunConfig::lgdc_params() const {
  LgdcTrainParams p;
  p.alpha = lgdc.alpha;
  p.hidden = lgdc.hidden;
  p.lr = lgdc.lr;
  p.weight_decay = lgdc.weight_decay;
  p.epochs = lgdc.epochs;
  p.patience = lgdc.patience;
  p.seed = lgdc.seed;
  p.class_weighted = lgdc.class_weighted;
  return p;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
  if (!(threshold_km > 0.0)) fail("graph.threshold_km must be positive");
  if (c2v.top_k < 1) fail("c2v.top_k must be >= 1");
  if (c2v.walks_per_node < 1) fail("c2v.walks_per_node must be >= 1");
  if (c2v.walk_length < 2) fail("c2v.walk_length must be >= 2");
  if (c2v.window < 1) fail("c2v.window must be >= 1");
  if (c2v.dim < 2) fail("c2v.dim must be >= 2");
  if (c2v.epochs < 0) fail("c2v.epochs must be >= 0");
  if (!(c2v.lr > 0.0)) fail("c2v.lr must be positive");
  if (c2v.negatives < 1) fail("c2v.negatives must be >= 1");
  if (c2v.candidate_band < 0) fail("c2v.candidate_band must be >= 0");
  if (!(lgdc.alpha >= 0.0 && lgdc.alpha <= 1.0)) fail("lgdc.alpha must be in [0, 1]");
  if (lgdc.hidden < 1) fail("lgdc.hidden must be >= 1");
  if (!(lgdc.lr > 0.0)) fail("lgdc.lr must be positive");
  if (lgdc.weight_decay < 0.0) fail("lgdc.weight_decay must be >= 0");
  if (lgdc.epochs < 0) fail("lgdc.epochs must be >= 0");
  if (lgdc.patience < 0) fail("lgdc.patience must be >= 0");
  if (!(split.train > 0.0 && split.val > 0.0 && split.test > 0.0))
    fail("split ratios must all be positive");
  if (std::abs(split.train + split.val + split.test - 1.0) > 1e-9)
    fail("split ratios must sum to 1");
  if (eval.alphas.empty()) fail("eval.alphas must not be empty");
  for (double a : eval.alphas)
    if (!(a >= 0.0 && a <= 1.0)) fail("eval.alphas entries must be in [0, 1]");
  if (eval.n_seeds < 1) fail("eval.n_seeds must be >= 1");
  if (analysis_radii.empty()) fail("analysis.radii must not be empty");
  for (std::size_t i = 0; i < analysis_radii.size(); ++i) {
    if (!(analysis_radii[i] > 0.0)) fail("analysis.radii must be positive");
    if (i > 0 && !(analysis_radii[i] > analysis_radii[i - 1]))
      fail("analysis.radii must be strictly increasing");
  }
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": '" + v + "'");
}

double parse_num(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("junk");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + key + ": '" + v + "'");
  }
}

std::uint64_t parse_seed(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("junk");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad seed for " + key + ": '" + v + "'");
  }
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) out.push_back(parse_num(trim(item), key));
  if (out.empty()) throw std::invalid_argument("config: empty list for " + key);
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "dataset") c.dataset = val;
    else if (key == "out") c.out_dir = val;
    else if (key == "graph.threshold_km") c.threshold_km = parse_num(val, key);
    else if (key == "graph.spherical") c.spherical = parse_bool(val, key);
    else if (key == "c2v.top_k") c.c2v.top_k = static_cast<int>(parse_num(val, key));
    else if (key == "c2v.walks_per_node") c.c2v.walks_per_node = static_cast<int>(parse_num(val, key));
    else if (key == "c2v.walk_length") c.c2v.walk_length = static_cast<int>(parse_num(val, key));
    else if (key == "c2v.window") c.c2v.window = static_cast<int>(parse_num(val, key));
    else if (key == "c2v.dim") c.c2v.dim = static_cast<int>(parse_num(val, key));
    else if (key == "c2v.epochs") c.c2v.epochs = static_cast<int>(parse_num(val, key));
    else if (key == "c2v.lr") c.c2v.lr = parse_num(val, key);
    else if (key == "c2v.seed") c.c2v.seed = parse_seed(val, key);
    else if (key == "c2v.negative_sampling") c.c2v.negative_sampling = parse_bool(val, key);
    else if (key == "c2v.negatives") c.c2v.negatives = static_cast<int>(parse_num(val, key));
    else if (key == "c2v.include_self") c.c2v.include_self = parse_bool(val, key);
    else if (key == "c2v.candidate_band") c.c2v.candidate_band = static_cast<int>(parse_num(val, key));
    else if (key == "lgdc.alpha") c.lgdc.alpha = parse_num(val, key);
    else if (key == "lgdc.hidden") c.lgdc.hidden = static_cast<int>(parse_num(val, key));
    else if (key == "lgdc.lr") c.lgdc.lr = parse_num(val, key);
    else if (key == "lgdc.weight_decay") c.lgdc.weight_decay = parse_num(val, key);
    else if (key == "lgdc.epochs") c.lgdc.epochs = static_cast<int>(parse_num(val, key));
    else if (key == "lgdc.patience") c.lgdc.patience = static_cast<int>(parse_num(val, key));
    else if (key == "lgdc.seed") c.lgdc.seed = parse_seed(val, key);
    else if (key == "lgdc.class_weighted") c.lgdc.class_weighted = parse_bool(val, key);
    else if (key == "split.train") c.split.train = parse_num(val, key);
    else if (key == "split.val") c.split.val = parse_num(val, key);
    else if (key == "split.test") c.split.test = parse_num(val, key);
    else if (key == "split.seed") c.split.seed = parse_seed(val, key);
    else if (key == "eval.alphas") c.eval.alphas = parse_list(val, key);
    else if (key == "eval.n_seeds") c.eval.n_seeds = static_cast<int>(parse_num(val, key));
    else if (key == "analysis.radii") c.analysis_radii = parse_list(val, key);
    else
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += num(v[i]);
  }
  return out;
}

}  // namespace

std::string config_to_text(const RunConfig& c) {
  std::ostringstream out;
  out << "dataset = " << c.dataset << '\n';
  out << "out = " << c.out_dir << '\n';
  out << "graph.threshold_km = " << num(c.threshold_km) << '\n';
  out << "graph.spherical = " << (c.spherical ? "true" : "false") << '\n';
  out << "c2v.top_k = " << c.c2v.top_k << '\n';
  out << "c2v.walks_per_node = " << c.c2v.walks_per_node << '\n';
  out << "c2v.walk_length = " << c.c2v.walk_length << '\n';
  out << "c2v.window = " << c.c2v.window << '\n';
  out << "c2v.dim = " << c.c2v.dim << '\n';
  out << "c2v.epochs = " << c.c2v.epochs << '\n';
  out << "c2v.lr = " << num(c.c2v.lr) << '\n';
  out << "c2v.seed = " << c.c2v.seed << '\n';
  out << "c2v.negative_sampling = " << (c.c2v.negative_sampling ? "true" : "false") << '\n';
  out << "c2v.negatives = " << c.c2v.negatives << '\n';
  out << "c2v.include_self = " << (c.c2v.include_self ? "true" : "false") << '\n';
  out << "c2v.candidate_band = " << c.c2v.candidate_band << '\n';
  out << "lgdc.alpha = " << num(c.lgdc.alpha) << '\n';
  out << "lgdc.hidden = " << c.lgdc.hidden << '\n';
  out << "lgdc.lr = " << num(c.lgdc.lr) << '\n';
  out << "lgdc.weight_decay = " << num(c.lgdc.weight_decay) << '\n';
  out << "lgdc.epochs = " << c.lgdc.epochs << '\n';
  out << "lgdc.patience = " << c.lgdc.patience << '\n';
  out << "lgdc.seed = " << c.lgdc.seed << '\n';
  out << "lgdc.class_weighted = " << (c.lgdc.class_weighted ? "true" : "false") << '\n';
  out << "split.train = " << num(c.split.train) << '\n';
  out << "split.val = " << num(c.split.val) << '\n';
  out << "split.test = " << num(c.split.test) << '\n';
  out << "split.seed = " << c.split.seed << '\n';
  out << "eval.alphas = " << list(c.eval.alphas) << '\n';
  out << "eval.n_seeds = " << c.eval.n_seeds << '\n';
  out << "analysis.radii = " << list(c.analysis_radii) << '\n';
  return out.str();
}

void write_config(const RunConfig& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write config: " + path);
  out << config_to_text(c);
}

void apply_seed_override(RunConfig& c, std::uint64_t n) {
  c.c2v.seed = mix_seed(n, 1);
  c.lgdc.seed = mix_seed(n, 2);
  c.split.seed = mix_seed(n, 3);
}

}  // namespace povgraph
