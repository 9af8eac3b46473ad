#include "paley/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "paley/errors.hpp"

namespace paley {

namespace {

double off_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = a[static_cast<std::size_t>(i) * n + j];
      s += 2.0 * v * v;
    }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const SymMatrix& m, double off_tol, int max_sweeps) {
  int n = m.order();
  if (n == 0) return {};
  std::vector<double> a = m.dense();
  double norm = m.frobenius();
  double tol = std::max(off_tol, 1e-14 * norm);

  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm(a, n) <= tol) {
      std::vector<double> ev(n);
      for (int i = 0; i < n; ++i) ev[i] = at(i, i);
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = at(r, p), arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }
  fail(Err::ConvergenceFailure, "jacobi did not converge within sweep cap");
}

}  // namespace paley
