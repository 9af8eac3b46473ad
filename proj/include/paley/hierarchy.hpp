#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "paley/esc.hpp"
#include "paley/graph.hpp"
#include "paley/theta.hpp"

namespace paley {

enum class HierarchyMode { Exhaustive, Heuristic };
enum class BoundKind { Esh, Vtesh };
enum class Exactness { Exact, UpperBound };

struct HierarchyConfig {
  int level = 2;
  HierarchyMode mode = HierarchyMode::Exhaustive;
  int cycles = 10;            // heuristic outer iterations
  int max_new_cuts = 200;     // per heuristic cycle
  long separation_budget = 20000;
  uint64_t seed = 20250101;
  double sdp_tol = 1e-7;
  double esc_tol = 1e-6;
  int threads = 1;
};

struct RoundTrace {
  double objective = 0.0;
  int active_cuts = 0;
  int new_cuts = 0;
};

struct BoundResult {
  double value = 0.0;
  BoundKind kind = BoundKind::Esh;
  Exactness exactness = Exactness::UpperBound;
  bool converged = false;  // the last separation pass found nothing violated
  double solver_gap = 0.0;
  std::vector<RoundTrace> trace;
  std::vector<CutPlane> active_cuts;
};

// Cutting-plane computation of z_J: solve the lifted theta SDP, separate
// every subset in J through the hull LP, add violated cuts (pairs and
// triples get their explicit facet systems alongside the Farkas cut), repeat
// until nothing is violated beyond cfg.esc_tol.  Round cap 100.
BoundResult z_with_cuts(const Graph& g, const std::vector<std::vector<int>>& J,
                        const HierarchyConfig& cfg);

// k-th hierarchy level: exhaustive J_k (guarded at C(n,k) <= 1e6) or the
// heuristic cycle loop driven by find_violated.
BoundResult z_level(const Graph& g, const HierarchyConfig& cfg);

// floor((sqrt(q) + 3) / 2) in exact integer arithmetic.
int ell(int q);

// Vertex-transitive variant: 1 + z_level on the local graph at anchor 0.
BoundResult vtesh_level(const Graph& g, const HierarchyConfig& cfg);

// Embeds a lifted-feasible local solution into the full graph: anchor gets
// weight 1, local vertices keep their block, removed neighbors get zero
// rows.  The result is lifted-feasible for g with objective 1 + sum(local_x).
std::pair<std::vector<double>, SymMatrix> embed_local_solution(
    const Graph& g, int anchor, const std::vector<double>& local_x, const SymMatrix& local_X,
    const std::vector<int>& vertex_map);

}  // namespace paley
