#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace povgraph {

// Dense row-major matrix of doubles. Embeddings, layer weights and
// activations all use this; no external linear algebra dependency.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// eight independent accumulators so the FP adds pipeline/vectorize
inline double dot(const double* a, const double* b, int n) {
  double s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    s[0] += a[i] * b[i];
    s[1] += a[i + 1] * b[i + 1];
    s[2] += a[i + 2] * b[i + 2];
    s[3] += a[i + 3] * b[i + 3];
    s[4] += a[i + 4] * b[i + 4];
    s[5] += a[i + 5] * b[i + 5];
    s[6] += a[i + 6] * b[i + 6];
    s[7] += a[i + 7] * b[i + 7];
  }
  for (; i < n; ++i) s[0] += a[i] * b[i];
  return ((s[0] + s[1]) + (s[2] + s[3])) + ((s[4] + s[5]) + (s[6] + s[7]));
}

// out = A * B, shapes (n x k) * (k x m)
inline void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
  assert(a.cols() == b.rows());
  out = Matrix(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double* oi = out.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = ai[k];
      const double* bk = b.row(k);
      for (int j = 0; j < b.cols(); ++j) oi[j] += aik * bk[j];
    }
  }
}

// out = A^T * B, shapes (n x k)^T * (n x m) -> (k x m)
inline void matmul_at_b(const Matrix& a, const Matrix& b, Matrix& out) {
  assert(a.rows() == b.rows());
  out = Matrix(a.cols(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    const double* bi = b.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = ai[k];
      double* ok = out.row(k);
      for (int j = 0; j < b.cols(); ++j) ok[j] += aik * bi[j];
    }
  }
}

// out = A * B^T, shapes (n x k) * (m x k)^T -> (n x m)
inline void matmul_a_bt(const Matrix& a, const Matrix& b, Matrix& out) {
  assert(a.cols() == b.cols());
  out = Matrix(a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double* oi = out.row(i);
    for (int j = 0; j < b.rows(); ++j) oi[j] = dot(ai, b.row(j), a.cols());
  }
}

}  // namespace povgraph
