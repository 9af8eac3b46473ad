#pragma once

#include <cassert>
#include <cmath>
#include <vector>

namespace paley {

// Dense symmetric matrix, packed upper triangle in row-major order.
// Inner products follow the full-matrix convention <A,B> = sum_ij A_ij B_ij,
// i.e. off-diagonal entries count twice.
class SymMatrix {
 public:
  SymMatrix() : n_(0) {}
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {}

  static SymMatrix identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
  }

  int order() const { return n_; }

  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double v) { a_[idx(i, j)] = v; }
  void add(int i, int j, double v) { a_[idx(i, j)] += v; }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        double v = (*this)(i, j);
        s += (i == j ? 1.0 : 2.0) * v * v;
      }
    return std::sqrt(s);
  }

  void scale(double c) {
    for (double& v : a_) v *= c;
  }

  // Full n*n row-major copy.
  std::vector<double> dense() const {
    std::vector<double> d(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) d[static_cast<std::size_t>(i) * n_ + j] = (*this)(i, j);
    return d;
  }

  static SymMatrix from_dense(const std::vector<double>& d, int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        m.set(i, j, 0.5 * (d[static_cast<std::size_t>(i) * n + j] +
                           d[static_cast<std::size_t>(j) * n + i]));
    return m;
  }

  const std::vector<double>& packed() const { return a_; }

  // Upper-triangle vectorization, diagonal included, row by row.
  std::vector<double> upper_vector() const { return a_; }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i > j) std::swap(i, j);
    assert(i >= 0 && j < n_);
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
           (j - i);
  }

  int n_;
  std::vector<double> a_;
};

inline double inner(const SymMatrix& a, const SymMatrix& b) {
  assert(a.order() == b.order());
  double s = 0.0;
  int n = a.order();
  for (int i = 0; i < n; ++i) {
    s += a(i, i) * b(i, i);
    for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * b(i, j);
  }
  return s;
}

}  // namespace paley
