#include "paley/theta.hpp"

#include <cmath>

#include "paley/errors.hpp"

namespace paley {

SdpProblem lifted_theta_problem(const Graph& g) {
  int n = g.order();
  SdpProblem p;
  p.order = n + 1;
  p.objective = SymMatrix(n + 1);
  for (int i = 0; i < n; ++i) p.objective.set(i, n, 0.5);  // <C, M> = sum_i M_in
  p.equalities.push_back({{{n, n, 1.0}}, 1.0});
  for (int i = 0; i < n; ++i) p.equalities.push_back({{{i, i, 1.0}, {i, n, -0.5}}, 0.0});
  for (auto [u, v] : g.edges()) p.equalities.push_back({{{u, v, 0.5}}, 0.0});
  return p;
}

namespace {

ThetaSolution extract_lifted(const Graph& g, const SdpSolution& s, ThetaVariant variant) {
  int n = g.order();
  ThetaSolution t;
  t.variant = variant;
  t.status = s.status;
  t.solver_gap = s.gap;
  t.value = s.objective;
  t.x.resize(n);
  t.X = SymMatrix(n);
  for (int i = 0; i < n; ++i) {
    t.x[i] = s.X(i, n);
    for (int j = i; j < n; ++j) t.X.set(i, j, s.X(i, j));
  }
  return t;
}

}  // namespace

ThetaSolution theta_lifted(const Graph& g, double tol) {
  return extract_lifted(g, sdp_solve(lifted_theta_problem(g), tol), ThetaVariant::Lifted);
}

ThetaSolution theta_trace(const Graph& g, double tol) {
  int n = g.order();
  SdpProblem p;
  p.order = n;
  p.objective = SymMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.objective.set(i, j, 1.0);
  LinearConstraint tr;
  for (int i = 0; i < n; ++i) tr.a.push_back({i, i, 1.0});
  tr.rhs = 1.0;
  p.equalities.push_back(tr);
  for (auto [u, v] : g.edges()) p.equalities.push_back({{{u, v, 0.5}}, 0.0});
  SdpSolution s = sdp_solve(p, tol);
  ThetaSolution t;
  t.variant = ThetaVariant::Trace;
  t.status = s.status;
  t.solver_gap = s.gap;
  t.value = s.objective;
  t.X = s.X;
  return t;
}

ThetaSolution theta_schrijver(const Graph& g, double tol) {
  SdpProblem p = lifted_theta_problem(g);
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) p.inequalities.push_back({{{i, j, -0.5}}, 0.0});
  return extract_lifted(g, sdp_solve(p, tol), ThetaVariant::SchrijverLifted);
}

bool lifted_feasible(const Graph& g, const std::vector<double>& x, const SymMatrix& X,
                     double tol) {
  int n = g.order();
  if (static_cast<int>(x.size()) != n || X.order() != n) return false;
  for (int i = 0; i < n; ++i)
    if (std::fabs(X(i, i) - x[i]) > tol) return false;
  for (auto [u, v] : g.edges())
    if (std::fabs(X(u, v)) > tol) return false;
  SymMatrix bordered(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) bordered.set(i, j, X(i, j));
  for (int i = 0; i < n; ++i) bordered.set(i, n, x[i]);
  bordered.set(n, n, 1.0);
  return min_eigenvalue(bordered) >= -tol;
}

bool trace_feasible(const Graph& g, const SymMatrix& X, double tol) {
  if (X.order() != g.order()) return false;
  if (std::fabs(X.trace() - 1.0) > tol) return false;
  for (auto [u, v] : g.edges())
    if (std::fabs(X(u, v)) > tol) return false;
  return min_eigenvalue(X) >= -tol;
}

std::pair<std::vector<double>, SymMatrix> lift_trace_solution(const Graph& g,
                                                              const SymMatrix& xp) {
  if (!trace_feasible(g, xp, 1e-6))
    fail(Err::InfeasibleInput, "lift_trace_solution: input not feasible for the trace form");
  int n = g.order();
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) total += xp(i, j);
  SymMatrix y = xp;
  y.scale(total);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = y(i, i);
  return {x, y};
}

SymMatrix normalize_lifted_solution(const Graph& g, const std::vector<double>& x,
                                    const SymMatrix& X) {
  if (!lifted_feasible(g, x, X, 1e-6))
    fail(Err::InfeasibleInput, "normalize_lifted_solution: input not feasible for the lifted form");
  double tr = X.trace();
  if (tr <= 1e-12) fail(Err::ZeroTrace, "normalize_lifted_solution: trace is not positive");
  SymMatrix y = X;
  y.scale(1.0 / tr);
  return y;
}

}  // namespace paley
