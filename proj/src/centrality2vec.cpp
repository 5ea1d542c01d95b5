#include "povgraph/centrality2vec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "povgraph/centrality.hpp"
#include "povgraph/rng.hpp"

namespace povgraph {

CentralitySequence centrality_sequence(const SpatialGraph& g,
                                       const std::vector<int>& centrality,
                                       int node, bool include_self) {
  CentralitySequence seq;
  seq.reserve(g.adj[node].size() + 1);
  if (include_self) seq.push_back(centrality[node] + 1);
  for (const auto& [j, dist] : g.adj[node]) {
    (void)dist;
    seq.push_back(centrality[j] + 1);
  }
  if (seq.empty()) seq.push_back(centrality[node] + 1);  // isolated, open mode
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::vector<CentralitySequence> all_sequences(const SpatialGraph& g,
                                              const std::vector<int>& centrality,
                                              bool include_self) {
  std::vector<CentralitySequence> out(g.n);
  for (int i = 0; i < g.n; ++i)
    out[i] = centrality_sequence(g, centrality, i, include_self);
  return out;
}

double element_cost(double a, double b) {
  if (a < 1.0 || b < 1.0)
    throw std::invalid_argument("element_cost: values must be >= 1 (shifted centralities)");
  return a >= b ? a / b - 1.0 : b / a - 1.0;
}

namespace {

// exp for softmax arguments (always <= 0 after max subtraction): range
// reduction to |f| <= ln2/2 plus a degree-11 Taylor horner, ~1e-14 relative.
// Pure elementwise arithmetic, so the compiler can vectorize softmax loops;
// used by the training loop and the test hooks alike so both paths agree.
inline double exp_approx(double x) {
  if (x < -690.0) return 0.0;
  const double inv_ln2 = 1.4426950408889634074;
  const double ln2_hi = 6.93147180369123816490e-01;
  const double ln2_lo = 1.90821492927058770002e-10;
  const double k = std::nearbyint(x * inv_ln2);
  const double f = (x - k * ln2_hi) - k * ln2_lo;
  double p = 1.0 / 39916800.0;  // 1/11!
  p = p * f + 1.0 / 3628800.0;
  p = p * f + 1.0 / 362880.0;
  p = p * f + 1.0 / 40320.0;
  p = p * f + 1.0 / 5040.0;
  p = p * f + 1.0 / 720.0;
  p = p * f + 1.0 / 120.0;
  p = p * f + 1.0 / 24.0;
  p = p * f + 1.0 / 6.0;
  p = p * f + 0.5;
  p = p * f + 1.0;
  p = p * f + 1.0;
  const std::int64_t bits = (static_cast<std::int64_t>(k) + 1023) << 52;
  double scale;
  std::memcpy(&scale, &bits, sizeof scale);
  return p * scale;
}

// cheapest ratio cost of value v against the sorted sequence; the minimizer
// is always the predecessor or successor of v
double min_cost_against(const CentralitySequence& sorted, int v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  double best = std::numeric_limits<double>::infinity();
  if (it != sorted.end())
    best = static_cast<double>(*it) / v - 1.0;
  if (it != sorted.begin()) {
    const double prev = static_cast<double>(v) / *(it - 1) - 1.0;
    best = std::min(best, prev);
  }
  return best;
}

}  // namespace

double sequence_cost(const CentralitySequence& from, const CentralitySequence& to) {
  if (from.empty() || to.empty())
    throw std::invalid_argument("sequence_cost: empty sequence");
  double total = 0.0;
  for (int v : to) total += min_cost_against(from, v);
  return total;
}

SimilarityGraph build_similarity_graph(const std::vector<CentralitySequence>& sequences,
                                       const std::vector<int>& self_centrality,
                                       int top_k, int candidate_band) {
  if (top_k < 1) throw std::invalid_argument("build_similarity_graph: top_k must be >= 1");
  const int n = static_cast<int>(sequences.size());
  if (candidate_band > 0 && static_cast<int>(self_centrality.size()) != n)
    throw std::invalid_argument("build_similarity_graph: banding needs self centralities");

  SimilarityGraph sim;
  sim.neighbors.assign(n, {});
  std::vector<std::pair<double, int>> row;
  for (int i = 0; i < n; ++i) {
    row.clear();
    row.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (candidate_band > 0 &&
          std::abs(self_centrality[i] - self_centrality[j]) > candidate_band)
        continue;
      row.emplace_back(sequence_cost(sequences[i], sequences[j]), j);
    }
    const int k = std::min<int>(top_k, static_cast<int>(row.size()));
    std::partial_sort(row.begin(), row.begin() + k, row.end());
    auto& out = sim.neighbors[i];
    out.reserve(k);
    for (int t = 0; t < k; ++t) out.push_back(row[t].second);
    std::sort(out.begin(), out.end());
  }
  return sim;
}

double CombinedTransition::prob(int i, int j) const {
  const auto& t = targets[i];
  if (t.empty()) return 0.0;
  return std::binary_search(t.begin(), t.end(), j) ? 1.0 / t.size() : 0.0;
}

CombinedTransition combined_transition(const SimilarityGraph& sim_degree,
                                       const SimilarityGraph& sim_core) {
  if (sim_degree.n() != sim_core.n())
    throw std::invalid_argument("combined_transition: size mismatch");
  const int n = sim_degree.n();
  CombinedTransition t;
  t.targets.assign(n, {});
  for (int i = 0; i < n; ++i) {
    auto& u = t.targets[i];
    std::set_union(sim_degree.neighbors[i].begin(), sim_degree.neighbors[i].end(),
                   sim_core.neighbors[i].begin(), sim_core.neighbors[i].end(),
                   std::back_inserter(u));
  }
  return t;
}

WalkCorpus random_walks(const CombinedTransition& t, int walks_per_node,
                        int walk_length, std::uint64_t seed) {
  if (walks_per_node < 1) throw std::invalid_argument("random_walks: need walks_per_node >= 1");
  if (walk_length < 2) throw std::invalid_argument("random_walks: need walk_length >= 2");
  const int n = t.n();
  WalkCorpus corpus;
  corpus.n_nodes = n;
  corpus.walk_length = walk_length;
  corpus.walks.reserve(static_cast<std::size_t>(n) * walks_per_node);
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < walks_per_node; ++r) {
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(v) * walks_per_node + r));
      std::vector<int> walk;
      walk.reserve(walk_length);
      int cur = v;
      walk.push_back(cur);
      for (int step = 1; step < walk_length; ++step) {
        const auto& targets = t.targets[cur];
        if (targets.empty()) {
          cur = rng.uniform_int(n);  // restart rule for sink nodes
        } else {
          cur = targets[rng.uniform_int(static_cast<int>(targets.size()))];
        }
        walk.push_back(cur);
      }
      corpus.walks.push_back(std::move(walk));
    }
  }
  return corpus;
}

std::vector<double> skipgram_softmax(const Matrix& h, int center) {
  const int n = h.rows();
  const int d = h.cols();
  std::vector<double> z(n);
  const double* hc = h.row(center);
  double zmax = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    z[k] = dot(h.row(k), hc, d);
    zmax = std::max(zmax, z[k]);
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    z[k] = exp_approx(z[k] - zmax);
    sum += z[k];
  }
  for (int k = 0; k < n; ++k) z[k] /= sum;
  return z;
}

double skipgram_pair_loss(const Matrix& h, int center, int context) {
  const int n = h.rows();
  const int d = h.cols();
  const double* hc = h.row(center);
  double zmax = -std::numeric_limits<double>::infinity();
  std::vector<double> z(n);
  for (int k = 0; k < n; ++k) {
    z[k] = dot(h.row(k), hc, d);
    zmax = std::max(zmax, z[k]);
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += exp_approx(z[k] - zmax);
  return std::log(sum) + zmax - z[context];
}

void skipgram_pair_gradient(const Matrix& h, int center, int context, Matrix& grad) {
  const int n = h.rows();
  const int d = h.cols();
  if (grad.rows() != n || grad.cols() != d) grad = Matrix(n, d);
  const std::vector<double> p = skipgram_softmax(h, center);
  const double* hc = h.row(center);
  // dL/dz_k = p_k - [k == context]; z_k = h_k . h_c
  for (int k = 0; k < n; ++k) {
    const double g = p[k] - (k == context ? 1.0 : 0.0);
    double* gk = grad.row(k);
    for (int t = 0; t < d; ++t) gk[t] += g * hc[t];
  }
  double* gc = grad.row(center);
  for (int k = 0; k < n; ++k) {
    const double g = p[k] - (k == context ? 1.0 : 0.0);
    const double* hk = h.row(k);
    for (int t = 0; t < d; ++t) gc[t] += g * hk[t];
  }
}

namespace {

struct NegativeTable {
  std::vector<int> table;

  void build(const WalkCorpus& corpus, int n) {
    std::vector<double> counts(n, 0.0);
    for (const auto& w : corpus.walks)
      for (int v : w) counts[v] += 1.0;
    double total = 0.0;
    for (double& c : counts) {
      c = std::pow(c, 0.75);
      total += c;
    }
    const int size = std::max(n * 16, 1 << 16);
    table.resize(size);
    int idx = 0;
    double cum = counts[0];
    for (int s = 0; s < size; ++s) {
      const double target = (s + 0.5) / size * total;
      while (cum < target && idx < n - 1) cum += counts[++idx];
      table[s] = idx;
    }
  }

  int sample(Rng& rng) const { return table[rng.uniform_int(static_cast<int>(table.size()))]; }
};

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// mean full-softmax pair loss over the whole corpus with frozen embeddings;
// one softmax per center position
double corpus_mean_loss(const Matrix& h, const WalkCorpus& corpus, int window) {
  const int n = h.rows();
  const int d = h.cols();
  std::vector<double> zbuf(n);
  double sum = 0.0;
  std::size_t pairs = 0;
  for (const auto& walk : corpus.walks) {
    const int len = static_cast<int>(walk.size());
    for (int p = 0; p < len; ++p) {
      const int lo = std::max(0, p - window);
      const int hi = std::min(len - 1, p + window);
      if (hi - lo <= 0) continue;
      const double* hc = h.row(walk[p]);
      double zmax = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < n; ++k) {
        zbuf[k] = dot(h.row(k), hc, d);
        zmax = std::max(zmax, zbuf[k]);
      }
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += exp_approx(zbuf[k] - zmax);
      const double log_sum = std::log(s) + zmax;
      for (int q = lo; q <= hi; ++q) {
        if (q == p) continue;
        sum += log_sum - zbuf[walk[q]];
        ++pairs;
      }
    }
  }
  return sum / static_cast<double>(std::max<std::size_t>(pairs, 1));
}

}  // namespace

Matrix skipgram_init(int n, int dim, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x536b1470ULL));
  Matrix h(n, dim);
  for (std::size_t t = 0; t < h.size(); ++t)
    h.data()[t] = (rng.uniform() - 0.5) / dim;
  return h;
}

Matrix skipgram_train(const WalkCorpus& corpus, const SkipgramParams& params,
                      SkipgramStats* stats) {
  if (params.dim < 2) throw std::invalid_argument("skipgram_train: dim must be >= 2");
  if (params.window < 1) throw std::invalid_argument("skipgram_train: window must be >= 1");
  if (corpus.n_nodes < 1 || corpus.walks.empty())
    throw std::invalid_argument("skipgram_train: empty corpus");
  const int n = corpus.n_nodes;
  const int d = params.dim;
  const int z = params.window;

  Rng rng(mix_seed(params.seed, 0x536b1470ULL));
  Matrix h = skipgram_init(n, d, params.seed);

  NegativeTable neg;
  if (params.negative_sampling) neg.build(corpus, n);

  std::size_t total_positions = 0;
  for (const auto& w : corpus.walks) total_positions += w.size();
  total_positions *= static_cast<std::size_t>(std::max(params.epochs, 1));
  std::size_t positions_done = 0;

  std::vector<std::size_t> order(corpus.walks.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> zbuf(n), pbuf(n);
  std::vector<double> hc_old(d), delta_c(d), s1(d);

  if (stats) stats->epoch_loss.clear();
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    Rng erng = rng.fork(0x400 + epoch);
    erng.shuffle(order);
    double loss_sum = 0.0;
    std::size_t pair_count = 0;

    for (std::size_t wi : order) {
      const std::vector<int>& walk = corpus.walks[wi];
      const int len = static_cast<int>(walk.size());
      for (int p = 0; p < len; ++p) {
        const double frac = static_cast<double>(positions_done) / total_positions;
        const double lr = params.lr * std::max(1e-4, 1.0 - frac);
        ++positions_done;
        const int c = walk[p];
        const int lo = std::max(0, p - z);
        const int hi = std::min(len - 1, p + z);
        const int n_ctx = hi - lo;  // window positions minus the center itself
        if (n_ctx <= 0) continue;

        if (!params.negative_sampling) {
          // full softmax over every node, shared by the window's contexts
          const double* hc = h.row(c);
          double zmax = -std::numeric_limits<double>::infinity();
          for (int k = 0; k < n; ++k) {
            zbuf[k] = dot(h.row(k), hc, d);
            zmax = std::max(zmax, zbuf[k]);
          }
          double sum = 0.0;
          for (int k = 0; k < n; ++k) {
            pbuf[k] = exp_approx(zbuf[k] - zmax);  // unnormalized
            sum += pbuf[k];
          }
          const double inv_sum = 1.0 / sum;
          const double log_sum = std::log(sum) + zmax;

          // context rows contribute to the center gradient with their
          // pre-update values, so collect them before touching any row
          std::fill(delta_c.begin(), delta_c.end(), 0.0);
          for (int q = lo; q <= hi; ++q) {
            if (q == p) continue;
            const int o = walk[q];
            loss_sum += log_sum - zbuf[o];
            const double* ho = h.row(o);
            for (int t = 0; t < d; ++t) delta_c[t] += ho[t];
          }
          pair_count += n_ctx;
          std::copy(hc, hc + d, hc_old.begin());

          // fused pass: s1 = sum_k p_k h_k (pre-update values) and the
          // context-side update h_k -= lr * n_ctx * p_k * h_c_old, with the
          // softmax normalization folded into the coefficients
          const double gscale = lr * n_ctx * inv_sum;
          std::fill(s1.begin(), s1.end(), 0.0);
          for (int k = 0; k < n; ++k) {
            const double ek = pbuf[k];
            const double g = gscale * ek;
            double* hk = h.row(k);
            for (int t = 0; t < d; ++t) {
              const double v = hk[t];
              s1[t] += ek * v;
              hk[t] = v - g * hc_old[t];
            }
          }
          // add back the m_k term for actual context occurrences
          for (int q = lo; q <= hi; ++q) {
            if (q == p) continue;
            double* ho = h.row(walk[q]);
            for (int t = 0; t < d; ++t) ho[t] += lr * hc_old[t];
          }
          // center-side update
          for (int t = 0; t < d; ++t)
            delta_c[t] = n_ctx * inv_sum * s1[t] - delta_c[t];
          double* hc_mut = h.row(c);
          for (int t = 0; t < d; ++t) hc_mut[t] -= lr * delta_c[t];
        } else {
          // negative-sampling approximation of the softmax objective
          for (int q = lo; q <= hi; ++q) {
            if (q == p) continue;
            const int o = walk[q];
            std::fill(delta_c.begin(), delta_c.end(), 0.0);
            const double* hc = h.row(c);
            std::copy(hc, hc + d, hc_old.begin());
            for (int s = 0; s <= params.negatives; ++s) {
              int target;
              double label;
              if (s == 0) {
                target = o;
                label = 1.0;
              } else {
                target = neg.sample(rng);
                if (target == o) continue;
                label = 0.0;
              }
              double* ht = h.row(target);
              const double f = sigmoid(dot(ht, hc_old.data(), d));
              const double g = lr * (label - f);
              loss_sum += label == 1.0 ? -std::log(std::max(f, 1e-300))
                                       : -std::log(std::max(1.0 - f, 1e-300));
              for (int t = 0; t < d; ++t) {
                delta_c[t] += g * ht[t];
                ht[t] += g * hc_old[t];
              }
            }
            double* hc_mut = h.row(c);
            for (int t = 0; t < d; ++t) hc_mut[t] += delta_c[t];
            ++pair_count;
          }
        }

        if (!std::isfinite(loss_sum))
          throw std::runtime_error(
              "skipgram_train: non-finite loss at epoch " + std::to_string(epoch) +
              ", position " + std::to_string(positions_done) +
              " (lower the learning rate)");
      }
    }
    if (stats) {
      // full-softmax mode reports the exact corpus loss under the frozen
      // end-of-epoch embeddings; the sampled objective reports its running mean
      stats->epoch_loss.push_back(params.negative_sampling
                                      ? loss_sum / std::max<std::size_t>(pair_count, 1)
                                      : corpus_mean_loss(h, corpus, z));
    }
  }
  return h;
}

void write_embeddings(const Matrix& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write embeddings: " + path);
  out << h.rows() << ' ' << h.cols() << '\n';
  char buf[40];
  for (int i = 0; i < h.rows(); ++i) {
    const double* row = h.row(i);
    for (int j = 0; j < h.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.8g", row[j]);
      out << buf << (j + 1 == h.cols() ? '\n' : ' ');
    }
  }
}

Matrix read_embeddings(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read embeddings: " + path);
  int n = 0, d = 0;
  if (!(in >> n >> d) || n < 1 || d < 1)
    throw std::runtime_error("bad embeddings header in " + path);
  Matrix h(n, d);
  for (std::size_t t = 0; t < h.size(); ++t) {
    if (!(in >> h.data()[t]))
      throw std::runtime_error("truncated embeddings file " + path);
  }
  return h;
}

Matrix centrality2vec(const SpatialGraph& g, const Centrality2VecParams& params,
                      SkipgramStats* stats) {
  const CentralityProfile prof = centrality_profile(g);
  const auto deg_seq = all_sequences(g, prof.degree, params.include_self);
  const auto core_seq = all_sequences(g, prof.coreness, params.include_self);

  std::vector<int> deg_shifted(g.n), core_shifted(g.n);
  for (int i = 0; i < g.n; ++i) {
    deg_shifted[i] = prof.degree[i] + 1;
    core_shifted[i] = prof.coreness[i] + 1;
  }
  const SimilarityGraph sim_deg =
      build_similarity_graph(deg_seq, deg_shifted, params.top_k, params.candidate_band);
  const SimilarityGraph sim_core =
      build_similarity_graph(core_seq, core_shifted, params.top_k, params.candidate_band);

  const CombinedTransition trans = combined_transition(sim_deg, sim_core);
  const WalkCorpus corpus = random_walks(trans, params.walks_per_node,
                                         params.walk_length, params.skipgram.seed);
  return skipgram_train(corpus, params.skipgram, stats);
}

}  // namespace povgraph
