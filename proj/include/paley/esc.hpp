#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "paley/conic.hpp"
#include "paley/graph.hpp"

namespace paley {

// Linear inequality <H, X_I> <= h on the principal submatrix indexed by the
// sorted vertex set I; valid for STAB^2 of the induced subgraph.
struct CutPlane {
  std::vector<int> I;
  SymMatrix H;
  double h = 0.0;
};

struct EscOutcome {
  bool satisfied = false;
  std::vector<double> weights;  // convex coefficients over stab2_vertices order
  CutPlane cut;                 // only when violated
  double violation = 0.0;       // normalized to max |H| = 1
};

// Outer products s s^T of all stable incidence vectors of the subgraph
// induced by I, in the enumeration order of enumerate_stable_sets.
std::vector<SymMatrix> stab2_vertices(const Graph& g, const std::vector<int>& I);

// Membership of X_I in STAB^2(G_I) by the hull LP; a violated outcome
// carries the Farkas hyperplane as a cut on I.
EscOutcome esc_check(const SymMatrix& x, const Graph& g, const std::vector<int>& I, double tol);

// Explicit facet systems for pairs and triples.
std::array<CutPlane, 4> esc_ineq_k2(int i, int j);
std::array<CutPlane, 4> esc_ineq_k3(int i, int j, int l);

struct ViolatedSubset {
  std::vector<int> I;
  double violation = 0.0;
};

// Randomized search for order-k subsets whose ESC is violated by X: repeated
// single-swap hill climbing with simulated-annealing acceptance (geometric
// cooling, ratio 0.95 every 50 moves).  Returns at most top_m distinct
// subsets sorted by violation descending, ties lexicographic on I.
// Deterministic for a fixed seed, independent of the thread count.
std::vector<ViolatedSubset> find_violated(const SymMatrix& x, const Graph& g, int k, long budget,
                                          int top_m, uint64_t seed, double tol = 1e-6,
                                          int threads = 1);

}  // namespace paley
