#pragma once

#include <string>
#include <vector>

#include "paley/symmat.hpp"

namespace paley {

// One entry of a sparse symmetric coefficient matrix; (i, j) with i <= j
// stands for the symmetric pair, so <A, X> = sum over entries of
// v * X_ij * (i == j ? 1 : 2).
struct SymEntry {
  int i;
  int j;
  double v;
};

struct LinearConstraint {
  std::vector<SymEntry> a;
  double rhs = 0.0;

  static LinearConstraint from_sym(const SymMatrix& m, double rhs, double prune = 0.0);
  double dot(const SymMatrix& x) const;
};

// max <C, X>  s.t.  <A_p, X> = b_p,  <B_j, X> <= d_j,  X psd  (one block).
struct SdpProblem {
  int order = 0;
  SymMatrix objective;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
};

enum class SdpStatus { Optimal, MaxIterations, PrimalInfeasible, NumericalTrouble };

std::string to_string(SdpStatus s);

struct SdpSolution {
  SymMatrix X;
  std::vector<double> y;  // equality multipliers
  std::vector<double> u;  // inequality multipliers, >= 0 at optimality
  SymMatrix S;            // dual slack, psd at optimality
  double objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;  // relative duality gap
  int iterations = 0;
  SdpStatus status = SdpStatus::NumericalTrouble;
};

// Primal-dual interior-point method: Nesterov-Todd scaling, Mehrotra
// predictor-corrector, inequalities through nonnegative slacks, dense
// Cholesky of the Schur complement with escalating diagonal perturbation.
// Deterministic for fixed inputs.
SdpSolution sdp_solve(const SdpProblem& prob, double tol = 1e-7, int max_iter = 200);

// Smallest eigenvalue by cyclic Jacobi; order <= 512.
double min_eigenvalue(const SymMatrix& m);

// Convex-hull membership of `target` in conv(points) via a phase-1 simplex
// with Bland's rule.  Inside: convex weights with l1 reconstruction error
// <= tol.  Outside: a Farkas separating hyperplane <H, p> <= h for every
// generating point, normalized to max |H| = 1, with <H, target> = h +
// violation.
struct MembershipResult {
  bool inside = false;
  std::vector<double> weights;     // inside
  std::vector<double> hyperplane;  // outside; same dimension as the points
  double offset = 0.0;
  double violation = 0.0;
};

MembershipResult hull_membership(const std::vector<std::vector<double>>& points,
                                 const std::vector<double>& target, double tol);

}  // namespace paley
