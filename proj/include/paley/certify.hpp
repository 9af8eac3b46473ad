#pragma once

#include <cstdint>
#include <vector>

#include "paley/graph.hpp"
#include "paley/symmat.hpp"

namespace paley {

// Closed-form optimum of the lifted theta SDP for P_q: x*_i = 1/sqrt(q),
// diagonal 1/sqrt(q), non-edges 2/(q + sqrt(q)), edges 0.
struct PaleyThetaSolution {
  int q = 0;
  std::vector<double> x_star;
  SymMatrix X_star;
};

// Builds the pair and verifies feasibility (1e-8) plus the eigenvalue
// structure {1, 2/(1+sqrt q), 0} with multiplicities {1, (q-1)/2, (q-1)/2}
// before returning; a verification failure is a defect and throws
// std::logic_error.
PaleyThetaSolution paley_theta_solution(int q);

// Convex-combination certificate that X*_I lies in STAB^2(P_q restricted to
// I): lambda * 0 + sum mu_a E_a + sum nu_ab E_ab (+ sigma s s^T).
struct EscWeights {
  std::vector<int> I;
  double lambda = 0.0;
  std::vector<double> mu;
  SymMatrix nu;  // nu(a,b) for a < b in local indices; zero diagonal
  bool has_sigma = false;
  double sigma = 0.0;
  std::vector<int> S;  // local indices of the sigma stable set
};

class PaleyCertifier {
 public:
  explicit PaleyCertifier(int q);

  int q() const { return q_; }
  int level_cap() const { return ell_; }
  const Graph& graph() const { return g_; }
  const PaleyThetaSolution& solution() const { return sol_; }

  // weights for |I| <= ell(q) (pairs also valid at q = 5)
  EscWeights base(const std::vector<int>& I) const;
  // weights for |I| = ell(q) + 1, q >= 25; needs a stable augmentation when
  // some vertex of I is isolated in the induced subgraph
  EscWeights plus1(const std::vector<int>& I) const;

  // max entrywise reconstruction error; exact rational arithmetic when q is
  // a perfect square, guarded floating point otherwise.  min_weight gets the
  // smallest weight in the certificate.
  double verify(const EscWeights& w, double* min_weight = nullptr) const;

 private:
  EscWeights assemble(const std::vector<int>& I, const std::vector<int>& S_local) const;

  int q_;
  int ell_;
  int sqrt_q_int_;  // isqrt(q); q == sqrt_q_int_^2 iff q is a square
  double rq_;
  Graph g_;
  PaleyThetaSolution sol_;
};

EscWeights esc_certificate_base(int q, const std::vector<int>& I);
EscWeights esc_certificate_plus1(int q, const std::vector<int>& I);

struct StagnationReport {
  int q = 0;
  int k = 0;
  bool exhaustive = false;
  bool used_lp_scan = false;  // k beyond the certified range: hull-LP scan of X*
  long checked = 0;
  long passed = 0;
  double max_recon_error = 0.0;
  double min_weight = 0.0;
  std::vector<std::vector<int>> failures;  // at most 8 offending subsets
};

// Runs the certificate constructor (or, beyond the certified levels, the
// hull-LP check of X*) over all subsets of size k, or over `samples` seeded
// random subsets when samples > 0.  A full pass certifies that (x*, X*)
// stays feasible at level k, hence z_k(P_q) = sqrt(q).
StagnationReport verify_stagnation(int q, int k, long samples, uint64_t seed = 20250101,
                                   int threads = 1);

}  // namespace paley
