#include <algorithm>
#include <cmath>
#include <vector>

#include "paley/conic.hpp"
#include "paley/errors.hpp"

namespace paley {

// Phase-1 simplex with Bland's rule on { lambda >= 0 : P lambda = target,
// sum lambda = 1 }.  Artificial variables start in the basis and never
// re-enter.  On infeasibility the simplex multipliers are the Farkas
// certificate: y with <y, col_t> <= 0 for every point column and
// <y, (target;1)> = phase-1 objective > 0.
MembershipResult hull_membership(const std::vector<std::vector<double>>& points,
                                 const std::vector<double>& target, double tol) {
  if (points.empty()) fail(Err::DimensionMismatch, "hull_membership: no generating points");
  const int dim = static_cast<int>(target.size());
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != dim)
      fail(Err::DimensionMismatch, "hull_membership: point dimension mismatch");

  const int rows = dim + 1;
  const int cols = static_cast<int>(points.size());

  std::vector<double> flip(rows, 1.0);
  std::vector<double> b(rows);
  for (int r = 0; r < dim; ++r) b[r] = target[r];
  b[dim] = 1.0;
  for (int r = 0; r < rows; ++r)
    if (b[r] < 0.0) {
      flip[r] = -1.0;
      b[r] = -b[r];
    }
  auto column = [&](int t, int r) -> double {
    double v = r < dim ? points[t][r] : 1.0;
    return flip[r] * v;
  };

  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = cols + r;  // artificials
  std::vector<double> binv(static_cast<std::size_t>(rows) * rows, 0.0);
  for (int r = 0; r < rows; ++r) binv[static_cast<std::size_t>(r) * rows + r] = 1.0;
  std::vector<double> xb = b;

  auto binv_at = [&](int r, int c) -> double& { return binv[static_cast<std::size_t>(r) * rows + c]; };

  std::vector<double> pi(rows), d(rows);
  std::vector<char> is_basic(cols, 0);
  const double eps_rc = 1e-11, eps_piv = 1e-12;
  const long max_pivots = 200000;

  for (long pivots = 0;; ++pivots) {
    if (pivots > max_pivots) fail(Err::ConvergenceFailure, "simplex pivot cap exceeded");
    // pi = c_B^T B^-1 ; artificial basics cost 1, point columns cost 0
    for (int c = 0; c < rows; ++c) {
      double v = 0.0;
      for (int r = 0; r < rows; ++r)
        if (basis[r] >= cols) v += binv_at(r, c);
      pi[c] = v;
    }
    // Bland: lowest-index point column with negative reduced cost
    int enter = -1;
    for (int t = 0; t < cols; ++t) {
      if (is_basic[t]) continue;
      double rc = 0.0;
      for (int r = 0; r < rows; ++r) rc -= pi[r] * column(t, r);
      if (rc < -eps_rc) {
        enter = t;
        break;
      }
    }
    if (enter < 0) break;  // optimal

    for (int r = 0; r < rows; ++r) {
      double v = 0.0;
      for (int c = 0; c < rows; ++c) v += binv_at(r, c) * column(enter, c);
      d[r] = v;
    }
    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      if (d[r] <= eps_piv) continue;
      double ratio = xb[r] / d[r];
      if (leave < 0 || ratio < best_ratio - 1e-14 ||
          (ratio < best_ratio + 1e-14 && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) fail(Err::ConvergenceFailure, "phase-1 simplex unbounded");

    double piv = d[leave];
    for (int c = 0; c < rows; ++c) binv_at(leave, c) /= piv;
    xb[leave] /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || d[r] == 0.0) continue;
      double f = d[r];
      for (int c = 0; c < rows; ++c) binv_at(r, c) -= f * binv_at(leave, c);
      xb[r] -= f * xb[leave];
      if (xb[r] < 0.0 && xb[r] > -1e-12) xb[r] = 0.0;
    }
    if (basis[leave] < cols) is_basic[basis[leave]] = 0;
    basis[leave] = enter;
    is_basic[enter] = 1;
  }

  double obj = 0.0;
  for (int r = 0; r < rows; ++r)
    if (basis[r] >= cols) obj += xb[r];

  MembershipResult res;
  if (obj <= tol) {
    res.inside = true;
    res.weights.assign(cols, 0.0);
    for (int r = 0; r < rows; ++r)
      if (basis[r] < cols) res.weights[basis[r]] = std::max(0.0, xb[r]);
    return res;
  }

  res.inside = false;
  res.hyperplane.assign(dim, 0.0);
  double y0 = flip[dim] * pi[dim];
  for (int r = 0; r < dim; ++r) res.hyperplane[r] = flip[r] * pi[r];
  res.offset = -y0;
  double norm = 0.0;
  for (double v : res.hyperplane) norm = std::max(norm, std::fabs(v));
  if (norm <= 0.0) fail(Err::ConvergenceFailure, "degenerate Farkas certificate");
  for (double& v : res.hyperplane) v /= norm;
  res.offset /= norm;
  res.violation = obj / norm;
  return res;
}

}  // namespace paley
