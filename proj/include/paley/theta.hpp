#pragma once

#include <utility>
#include <vector>

#include "paley/conic.hpp"
#include "paley/graph.hpp"

namespace paley {

enum class ThetaVariant { Lifted, Trace, SchrijverLifted };

struct ThetaSolution {
  double value = 0.0;
  std::vector<double> x;  // empty for the trace formulation
  SymMatrix X;
  ThetaVariant variant = ThetaVariant::Lifted;
  double solver_gap = 0.0;
  SdpStatus status = SdpStatus::NumericalTrouble;
};

// The bordered lifted formulation on a block M of order n+1:
// M[n][n] = 1, M_ii = M_in, M_ij = 0 on edges, M psd, maximize sum_i M_in.
SdpProblem lifted_theta_problem(const Graph& g);

ThetaSolution theta_lifted(const Graph& g, double tol = 1e-7);
ThetaSolution theta_trace(const Graph& g, double tol = 1e-7);
// Lifted formulation plus entrywise nonnegativity on non-edge pairs.
ThetaSolution theta_schrijver(const Graph& g, double tol = 1e-7);

// Trace-form solution X' maps to the lifted pair (diag(Y), Y) with
// Y = <J, X'> X'; optimal inputs stay optimal.
std::pair<std::vector<double>, SymMatrix> lift_trace_solution(const Graph& g, const SymMatrix& xp);

// Lifted-feasible (x, X) with tr(X) > 0 normalizes to X / tr(X), feasible in
// trace form.
SymMatrix normalize_lifted_solution(const Graph& g, const std::vector<double>& x,
                                    const SymMatrix& X);

bool lifted_feasible(const Graph& g, const std::vector<double>& x, const SymMatrix& X, double tol);
bool trace_feasible(const Graph& g, const SymMatrix& X, double tol);

}  // namespace paley
