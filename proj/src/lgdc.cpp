#include "povgraph/lgdc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "povgraph/rng.hpp"

namespace povgraph {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must be in [0, 1]");
}

}  // namespace

std::vector<double> aggregate_node(const SpatialGraph& g, const Matrix& h, int node,
                                   double alpha) {
  check_alpha(alpha);
  const int d = h.cols();
  std::vector<double> out(d, 0.0);
  const auto& nbrs = g.adj[node];
  if (nbrs.empty()) return out;
  const double inv_sqrt_i = 1.0 / std::sqrt(static_cast<double>(nbrs.size()));
  for (const auto& [j, dist] : nbrs) {
    const double w = std::pow(alpha, dist) * inv_sqrt_i /
                     std::sqrt(static_cast<double>(g.degree(j)));
    const double* hj = h.row(j);
    for (int t = 0; t < d; ++t) out[t] += w * hj[t];
  }
  return out;
}

Matrix aggregate(const SpatialGraph& g, const Matrix& h, double alpha) {
  check_alpha(alpha);
  const int d = h.cols();
  Matrix out(g.n, d);
  for (int i = 0; i < g.n; ++i) {
    const auto& nbrs = g.adj[i];
    if (nbrs.empty()) continue;
    const double inv_sqrt_i = 1.0 / std::sqrt(static_cast<double>(nbrs.size()));
    double* oi = out.row(i);
    for (const auto& [j, dist] : nbrs) {
      const double w = std::pow(alpha, dist) * inv_sqrt_i /
                       std::sqrt(static_cast<double>(g.degree(j)));
      const double* hj = h.row(j);
      for (int t = 0; t < d; ++t) oi[t] += w * hj[t];
    }
  }
  return out;
}

Matrix propagate(const SpatialGraph& g, const Matrix& h, double alpha) {
  Matrix out = aggregate(g, h, alpha);
  const int d = h.cols();
  for (int i = 0; i < g.n; ++i) {
    const double self = 1.0 / std::max(g.degree(i), 1);
    const double* hi = h.row(i);
    double* oi = out.row(i);
    for (int t = 0; t < d; ++t) oi[t] += self * hi[t];
  }
  return out;
}

Matrix layer_forward(const SpatialGraph& g, const Matrix& h,
                     const LgdcLayerParams& params, double alpha) {
  if (h.cols() != params.w.rows())
    throw std::invalid_argument("layer_forward: input width " + std::to_string(h.cols()) +
                                " does not match W rows " + std::to_string(params.w.rows()));
  if (static_cast<int>(params.b.size()) != params.w.cols())
    throw std::invalid_argument("layer_forward: bias length does not match W cols");
  const Matrix p = propagate(g, h, alpha);
  Matrix out;
  matmul(p, params.w, out);
  for (int i = 0; i < out.rows(); ++i) {
    double* oi = out.row(i);
    for (int t = 0; t < out.cols(); ++t) oi[t] += params.b[t];
  }
  return out;
}

namespace {

void relu_inplace(Matrix& m) {
  for (std::size_t t = 0; t < m.size(); ++t)
    if (m.data()[t] < 0.0) m.data()[t] = 0.0;
}

struct ForwardCache {
  std::vector<Matrix> inputs;   // propagated input of each layer (P x activation)
  std::vector<Matrix> pre_act;  // affine output of each layer
};

Matrix forward_cached(const LgdcModel& model, const SpatialGraph& g, const Matrix& h,
                      ForwardCache* cache) {
  Matrix act = h;
  const int n_layers = static_cast<int>(model.layers.size());
  for (int l = 0; l < n_layers; ++l) {
    const LgdcLayerParams& layer = model.layers[l];
    Matrix p = propagate(g, act, model.alpha);
    Matrix z;
    matmul(p, layer.w, z);
    for (int i = 0; i < z.rows(); ++i) {
      double* zi = z.row(i);
      for (int t = 0; t < z.cols(); ++t) zi[t] += layer.b[t];
    }
    if (cache) {
      cache->inputs.push_back(std::move(p));
      cache->pre_act.push_back(z);
    }
    if (l + 1 < n_layers) relu_inplace(z);
    act = std::move(z);
  }
  return act;
}

// per-node class weights over the mask; empty result means uniform
std::vector<double> mask_weights(const std::vector<int>& labels,
                                 const std::vector<int>& mask, bool class_weighted) {
  std::vector<double> w(mask.size(), 1.0);
  if (!class_weighted) return w;
  double cnt[2] = {0, 0};
  for (int i : mask) cnt[labels[i]] += 1.0;
  const double total = cnt[0] + cnt[1];
  for (std::size_t k = 0; k < mask.size(); ++k)
    w[k] = total / (2.0 * cnt[labels[mask[k]]]);
  return w;
}

double ce_from_logits(const double* z, int label) {
  const double m = std::max(z[0], z[1]);
  const double lse = m + std::log(std::exp(z[0] - m) + std::exp(z[1] - m));
  return lse - z[label];
}

void validate_mask(const std::vector<int>& labels, const std::vector<int>& mask,
                   int n) {
  bool has0 = false, has1 = false;
  for (int i : mask) {
    if (i < 0 || i >= n) throw std::invalid_argument("mask index out of range");
    if (labels[i] == 0) has0 = true;
    else if (labels[i] == 1) has1 = true;
    else throw std::invalid_argument("masked node " + std::to_string(i) + " is unlabeled");
  }
  if (!has0 || !has1)
    throw std::invalid_argument("mask must contain both classes");
}

double weight_sq_norm(const LgdcModel& model) {
  double s = 0.0;
  for (const auto& layer : model.layers)
    for (std::size_t t = 0; t < layer.w.size(); ++t)
      s += layer.w.data()[t] * layer.w.data()[t];
  return s;
}

}  // namespace

double lgdc_loss(const LgdcModel& model, const SpatialGraph& g, const Matrix& h,
                 const std::vector<int>& labels, const std::vector<int>& mask,
                 double weight_decay, bool class_weighted) {
  validate_mask(labels, mask, g.n);
  const Matrix logits = forward_cached(model, g, h, nullptr);
  const std::vector<double> w = mask_weights(labels, mask, class_weighted);
  double w_total = 0.0, loss = 0.0;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    loss += w[k] * ce_from_logits(logits.row(mask[k]), labels[mask[k]]);
    w_total += w[k];
  }
  loss /= w_total;
  loss += 0.5 * weight_decay * weight_sq_norm(model);
  return loss;
}

std::vector<LgdcLayerParams> lgdc_gradients(const LgdcModel& model,
                                            const SpatialGraph& g, const Matrix& h,
                                            const std::vector<int>& labels,
                                            const std::vector<int>& mask,
                                            double weight_decay, bool class_weighted) {
  validate_mask(labels, mask, g.n);
  const int n_layers = static_cast<int>(model.layers.size());
  ForwardCache cache;
  const Matrix logits = forward_cached(model, g, h, &cache);

  const std::vector<double> w = mask_weights(labels, mask, class_weighted);
  double w_total = 0.0;
  for (double v : w) w_total += v;

  // dLoss/dZ_last: weighted softmax-minus-onehot on mask rows
  Matrix gz(logits.rows(), logits.cols());
  for (std::size_t k = 0; k < mask.size(); ++k) {
    const int i = mask[k];
    const double* zi = logits.row(i);
    const double m = std::max(zi[0], zi[1]);
    const double e0 = std::exp(zi[0] - m), e1 = std::exp(zi[1] - m);
    const double inv = 1.0 / (e0 + e1);
    const double scale = w[k] / w_total;
    gz(i, 0) = scale * (e0 * inv - (labels[i] == 0 ? 1.0 : 0.0));
    gz(i, 1) = scale * (e1 * inv - (labels[i] == 1 ? 1.0 : 0.0));
  }

  std::vector<LgdcLayerParams> grads(n_layers);
  for (int l = n_layers - 1; l >= 0; --l) {
    const Matrix& input = cache.inputs[l];  // P x activation_{l-1}
    matmul_at_b(input, gz, grads[l].w);
    grads[l].b.assign(model.layers[l].w.cols(), 0.0);
    for (int i = 0; i < gz.rows(); ++i) {
      const double* gi = gz.row(i);
      for (int t = 0; t < gz.cols(); ++t) grads[l].b[t] += gi[t];
    }
    // weight decay on W only
    const Matrix& wmat = model.layers[l].w;
    for (std::size_t t = 0; t < wmat.size(); ++t)
      grads[l].w.data()[t] += weight_decay * wmat.data()[t];

    if (l > 0) {
      Matrix ga;  // gradient wrt the layer's propagated input
      matmul_a_bt(gz, model.layers[l].w, ga);
      // propagate back through P (symmetric), then the ReLU
      gz = propagate(g, ga, model.alpha);
      const Matrix& pre = cache.pre_act[l - 1];
      for (std::size_t t = 0; t < gz.size(); ++t)
        if (pre.data()[t] <= 0.0) gz.data()[t] = 0.0;
    }
  }
  return grads;
}

LgdcModel lgdc_init(int in_dim, int hidden, double alpha, std::uint64_t seed) {
  check_alpha(alpha);
  if (in_dim < 1 || hidden < 1) throw std::invalid_argument("lgdc_init: bad dimensions");
  LgdcModel model;
  model.alpha = alpha;
  Rng rng(mix_seed(seed, 0x16dcULL));
  const int dims[3] = {in_dim, hidden, 2};
  for (int l = 0; l < 2; ++l) {
    LgdcLayerParams layer;
    layer.w = Matrix(dims[l], dims[l + 1]);
    const double bound = std::sqrt(6.0 / (dims[l] + dims[l + 1]));  // Glorot
    for (std::size_t t = 0; t < layer.w.size(); ++t)
      layer.w.data()[t] = rng.uniform(-bound, bound);
    layer.b.assign(dims[l + 1], 0.0);
    model.layers.push_back(std::move(layer));
  }
  return model;
}

namespace {

struct AdamState {
  std::vector<LgdcLayerParams> m, v;
  int step = 0;

  explicit AdamState(const LgdcModel& model) {
    for (const auto& layer : model.layers) {
      LgdcLayerParams zm, zv;
      zm.w = Matrix(layer.w.rows(), layer.w.cols());
      zv.w = Matrix(layer.w.rows(), layer.w.cols());
      zm.b.assign(layer.b.size(), 0.0);
      zv.b.assign(layer.b.size(), 0.0);
      m.push_back(std::move(zm));
      v.push_back(std::move(zv));
    }
  }

  void update(LgdcModel& model, const std::vector<LgdcLayerParams>& grads, double lr) {
    constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEps = 1e-8;
    ++step;
    const double bc1 = 1.0 - std::pow(kBeta1, step);
    const double bc2 = 1.0 - std::pow(kBeta2, step);
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
      auto upd = [&](double& p, double& ms, double& vs, double grad) {
        ms = kBeta1 * ms + (1.0 - kBeta1) * grad;
        vs = kBeta2 * vs + (1.0 - kBeta2) * grad * grad;
        p -= lr * (ms / bc1) / (std::sqrt(vs / bc2) + kEps);
      };
      Matrix& w = model.layers[l].w;
      for (std::size_t t = 0; t < w.size(); ++t)
        upd(w.data()[t], m[l].w.data()[t], v[l].w.data()[t], grads[l].w.data()[t]);
      for (std::size_t t = 0; t < model.layers[l].b.size(); ++t)
        upd(model.layers[l].b[t], m[l].b[t], v[l].b[t], grads[l].b[t]);
    }
  }
};

}  // namespace

LgdcModel lgdc_train(const SpatialGraph& g, const Matrix& h,
                     const std::vector<int>& labels, const Split& split,
                     const LgdcTrainParams& params, LgdcTrainLog* log) {
  if (static_cast<int>(labels.size()) != g.n)
    throw std::invalid_argument("lgdc_train: labels length must equal node count");
  if (h.rows() != g.n) throw std::invalid_argument("lgdc_train: embedding rows != nodes");
  validate_mask(labels, split.train, g.n);

  LgdcModel model = lgdc_init(h.cols(), params.hidden, params.alpha, params.seed);
  if (params.epochs == 0) return model;

  AdamState adam(model);
  LgdcModel best = model;
  double best_f1 = -1.0;
  int best_epoch = -1;
  int bad_epochs = 0;

  std::vector<int> val_truth;
  for (int i : split.val) val_truth.push_back(labels[i]);

  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    const std::vector<LgdcLayerParams> grads = lgdc_gradients(
        model, g, h, labels, split.train, params.weight_decay, params.class_weighted);
    adam.update(model, grads, params.lr);

    const double loss = lgdc_loss(model, g, h, labels, split.train,
                                  params.weight_decay, params.class_weighted);
    if (!std::isfinite(loss))
      throw std::runtime_error("lgdc_train: non-finite loss at epoch " +
                               std::to_string(epoch) + " (lr=" + std::to_string(params.lr) +
                               ", weight_decay=" + std::to_string(params.weight_decay) + ")");
    if (log) log->train_loss.push_back(loss);

    if (!split.val.empty()) {
      const LgdcPrediction pred = lgdc_predict(model, g, h);
      std::vector<int> val_pred;
      val_pred.reserve(split.val.size());
      for (int i : split.val) val_pred.push_back(pred.cls[i]);
      const double f1 = macro_f1(val_pred, val_truth);
      if (log) log->val_f1.push_back(f1);
      if (f1 > best_f1) {
        best_f1 = f1;
        best = model;
        best_epoch = epoch;
        bad_epochs = 0;
      } else if (++bad_epochs > params.patience) {
        break;
      }
    }
  }
  if (log) log->best_epoch = best_epoch;
  return split.val.empty() ? model : best;
}

LgdcPrediction lgdc_predict(const LgdcModel& model, const SpatialGraph& g,
                            const Matrix& h) {
  const Matrix logits = forward_cached(model, g, h, nullptr);
  LgdcPrediction out;
  out.cls.resize(g.n);
  out.poor_prob.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    const double* z = logits.row(i);
    out.cls[i] = z[1] > z[0] ? 1 : 0;  // tie goes to the majority class
    out.poor_prob[i] = 1.0 / (1.0 + std::exp(z[0] - z[1]));
  }
  return out;
}

void write_checkpoint(const LgdcModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8g", model.alpha);
  out << model.layers.size() << ' ' << buf << '\n';
  for (const auto& layer : model.layers) {
    out << layer.w.rows() << ' ' << layer.w.cols() << '\n';
    for (int i = 0; i < layer.w.rows(); ++i) {
      for (int j = 0; j < layer.w.cols(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.8g", layer.w(i, j));
        out << buf << (j + 1 == layer.w.cols() ? '\n' : ' ');
      }
    }
    for (std::size_t j = 0; j < layer.b.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.8g", layer.b[j]);
      out << buf << (j + 1 == layer.b.size() ? '\n' : ' ');
    }
  }
}

LgdcModel read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
  std::size_t n_layers = 0;
  LgdcModel model;
  if (!(in >> n_layers >> model.alpha) || n_layers == 0)
    throw std::runtime_error("bad checkpoint header in " + path);
  for (std::size_t l = 0; l < n_layers; ++l) {
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
      throw std::runtime_error("bad layer shape in " + path);
    LgdcLayerParams layer;
    layer.w = Matrix(rows, cols);
    for (std::size_t t = 0; t < layer.w.size(); ++t)
      if (!(in >> layer.w.data()[t]))
        throw std::runtime_error("truncated checkpoint " + path);
    layer.b.resize(cols);
    for (int t = 0; t < cols; ++t)
      if (!(in >> layer.b[t])) throw std::runtime_error("truncated checkpoint " + path);
    model.layers.push_back(std::move(layer));
  }
  return model;
}

}  // namespace povgraph
