#include "paley/bounds.hpp"

#include <cmath>
#include <string>

#include "paley/errors.hpp"
#include "paley/gf.hpp"
#include "paley/hierarchy.hpp"
#include "paley/theta.hpp"

namespace paley {

double hoffman_bound(const Graph& g) {
  int n = g.order();
  if (n == 0) fail(Err::EmptyGraph, "hoffman_bound: empty graph");
  if (g.edge_count() == 0) fail(Err::EmptyGraph, "hoffman_bound: no edges, tau = 0");
  int r = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != r) fail(Err::NotRegular, "hoffman_bound: graph is not regular");
  double tau = spectrum(g).front();
  return n / (1.0 - r / tau);
}

double hanson_petridis(int q) {
  if (!is_prime(q)) fail(Err::NotPrime, "hanson_petridis: q = " + std::to_string(q) + " is not prime");
  if (q % 4 != 1) fail(Err::NotOneModFour, "hanson_petridis: q = " + std::to_string(q) + " is not 1 (mod 4)");
  return (std::sqrt(2.0 * q - 1.0) + 1.0) / 2.0;
}

double maistrelli(int q) {
  if (q <= 5) fail(Err::QTooSmall, "maistrelli: requires q > 5");
  int r = static_cast<int>(std::lround(std::floor(std::sqrt(static_cast<double>(q)))));
  while (static_cast<long long>(r) * r > q) --r;
  while (static_cast<long long>(r + 1) * (r + 1) <= q) ++r;
  if (r * r == q) fail(Err::SquareOrder, "maistrelli: q must not be a square");
  return std::sqrt(static_cast<double>(q - 4));
}

double cohen_lower(int q) {
  auto [p, s] = factor_prime_power(q);
  (void)s;
  if (static_cast<double>(q) <= std::exp(1.0))
    fail(Err::DomainError, "cohen_lower: log log q undefined");
  double lq = std::log(static_cast<double>(q));
  return (p / (p - 1.0)) * ((0.5 * lq - 2.0 * std::log(lq)) / std::log(2.0) + 1.0);
}

double b_m(int q, double tol) {
  auto [lg, map] = local_graph(paley_graph(q), 0);
  (void)map;
  ThetaSolution t = theta_lifted(lg, tol);
  if (t.status != SdpStatus::Optimal) fail(Err::ConvergenceFailure, "b_m: solver failed: " + to_string(t.status));
  return 1.0 + t.value;
}

double b_m_star(int q, double tol) {
  auto [lg, map] = local_graph(paley_graph(q), 0);
  (void)map;
  ThetaSolution t = theta_schrijver(lg, tol);
  if (t.status != SdpStatus::Optimal)
    fail(Err::ConvergenceFailure, "b_m_star: solver failed: " + to_string(t.status));
  return 1.0 + t.value;
}

BoundReport assemble_report(int q, const ReportOptions& options) {
  BoundReport rep;
  rep.q = q;
  Graph g = paley_graph(q);
  rep.ell = ell(q);

  if (options.with_alpha && q <= 128) {
    rep.alpha = brute_force_alpha(g).first;
  } else {
    rep.skipped["alpha"] = q > 128 ? "n > 128" : "disabled";
  }

  ThetaSolution t = theta_lifted(g, options.sdp_tol);
  if (t.status == SdpStatus::Optimal) {
    rep.theta = t.value;
    rep.theta_gap = t.solver_gap;
  } else {
    rep.skipped["theta"] = "solver: " + to_string(t.status);
  }

  rep.hoffman = hoffman_bound(g);

  try {
    rep.maistrelli = maistrelli(q);
  } catch (const Error& e) {
    rep.skipped["maistrelli"] = e.what();
  }
  try {
    rep.hanson = hanson_petridis(q);
  } catch (const Error& e) {
    rep.skipped["hanson"] = e.what();
  }
  try {
    rep.cohen = cohen_lower(q);
  } catch (const Error& e) {
    rep.skipped["cohen"] = e.what();
  }

  if (options.with_local) {
    auto [lg, map] = local_graph(g, 0);
    (void)map;
    ThetaSolution tl = theta_lifted(lg, options.sdp_tol);
    ThetaSolution ts = theta_schrijver(lg, options.sdp_tol);
    if (tl.status == SdpStatus::Optimal) {
      rep.b_m = 1.0 + tl.value;
      rep.local_gap = tl.solver_gap;
    } else {
      rep.skipped["b_m"] = "solver: " + to_string(tl.status);
    }
    if (ts.status == SdpStatus::Optimal) {
      rep.b_m_star = 1.0 + ts.value;
      rep.local_gap = std::max(rep.local_gap, ts.solver_gap);
    } else {
      rep.skipped["b_m_star"] = "solver: " + to_string(ts.status);
    }
  } else {
    rep.skipped["b_m"] = "disabled";
    rep.skipped["b_m_star"] = "disabled";
  }
  return rep;
}

}  // namespace paley
