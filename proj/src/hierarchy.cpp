#include "paley/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "paley/errors.hpp"
#include "paley/gf.hpp"
#include "paley/parallel.hpp"

namespace paley {

int ell(int q) {
  if (q < 5) fail(Err::QTooSmall, "ell: requires q >= 5");
  int r = 0;
  while (static_cast<long long>(r + 1) * (r + 1) <= q) ++r;
  return (r + 3) / 2;
}

namespace {

unsigned long long binomial_capped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    return out;
  }
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

LinearConstraint lift_cut(const CutPlane& cut) {
  LinearConstraint c;
  c.rhs = cut.h;
  int k = static_cast<int>(cut.I.size());
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b)
      if (cut.H(a, b) != 0.0) c.a.push_back({cut.I[a], cut.I[b], cut.H(a, b)});
  return c;
}

std::vector<long long> cut_key(const CutPlane& cut) {
  std::vector<long long> key;
  key.reserve(cut.I.size() + cut.H.packed().size() + 2);
  key.push_back(static_cast<long long>(cut.I.size()));
  for (int v : cut.I) key.push_back(v);
  for (double x : cut.H.packed()) key.push_back(llround(x * 1e9));
  key.push_back(llround(cut.h * 1e9));
  return key;
}

struct CutPool {
  struct Entry {
    CutPlane cut;
    int idle = 0;
  };
  std::vector<Entry> entries;
  std::set<std::vector<long long>> keys;

  bool add(const CutPlane& cut) {
    auto key = cut_key(cut);
    if (!keys.insert(key).second) return false;
    entries.push_back({cut, 0});
    return true;
  }

  // spec'd retirement: slack > 1e-4 and multiplier < 1e-9 for 3 rounds
  void retire(const SymMatrix& m, const std::vector<double>& mult) {
    std::vector<Entry> kept;
    kept.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      double slack = entries[i].cut.h - lift_cut(entries[i].cut).dot(m);
      bool inactive = slack > 1e-4 && mult[i] < 1e-9;
      entries[i].idle = inactive ? entries[i].idle + 1 : 0;
      if (entries[i].idle >= 3)
        keys.erase(cut_key(entries[i].cut));
      else
        kept.push_back(entries[i]);
    }
    entries.swap(kept);
  }
};

SymMatrix top_block(const SymMatrix& lifted, int n) {
  SymMatrix x(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) x.set(i, j, lifted(i, j));
  return x;
}

void add_violated_cut(CutPool& pool, const Graph& g, const EscOutcome& out, int& added) {
  if (out.satisfied) return;
  if (pool.add(out.cut)) ++added;
  const std::vector<int>& I = out.cut.I;
  if (I.size() == 2) {
    for (const CutPlane& c : esc_ineq_k2(I[0], I[1]))
      if (pool.add(c)) ++added;
  } else if (I.size() == 3) {
    for (const CutPlane& c : esc_ineq_k3(I[0], I[1], I[2]))
      if (pool.add(c)) ++added;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        for (const CutPlane& c : esc_ineq_k2(I[a], I[b]))
          if (pool.add(c)) ++added;
  }
  (void)g;
}

struct SolveState {
  SdpSolution sol;
  SymMatrix X;  // n-block
};

SolveState solve_with_pool(const Graph& g, const SdpProblem& base, CutPool& pool,
                           const HierarchyConfig& cfg) {
  SdpProblem prob = base;
  for (const auto& e : pool.entries) prob.inequalities.push_back(lift_cut(e.cut));
  SolveState st;
  st.sol = sdp_solve(prob, cfg.sdp_tol);
  st.X = top_block(st.sol.X, g.order());
  return st;
}

}  // namespace

BoundResult z_with_cuts(const Graph& g, const std::vector<std::vector<int>>& J,
                        const HierarchyConfig& cfg) {
  for (const auto& I : J)
    if (I.size() > 16) fail(Err::SubsetTooLarge, "z_with_cuts: subset larger than 16");

  SdpProblem base = lifted_theta_problem(g);
  CutPool pool;
  BoundResult res;
  res.kind = BoundKind::Esh;

  const int round_cap = 100;
  for (int round = 0; round < round_cap; ++round) {
    SolveState st = solve_with_pool(g, base, pool, cfg);
    if (st.sol.status != SdpStatus::Optimal && st.sol.status != SdpStatus::MaxIterations) {
      res.value = st.sol.objective;
      res.solver_gap = st.sol.gap;
      res.trace.push_back({st.sol.objective, static_cast<int>(pool.entries.size()), 0});
      res.exactness = Exactness::UpperBound;
      res.converged = false;
      return res;
    }

    std::vector<EscOutcome> outcomes(J.size());
    parallel_for(cfg.threads, J.size(), [&](std::size_t, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) outcomes[i] = esc_check(st.X, g, J[i], cfg.esc_tol);
    });

    pool.retire(st.sol.X, st.sol.u);
    int added = 0;
    for (const auto& out : outcomes)
      if (!out.satisfied && out.violation > cfg.esc_tol) add_violated_cut(pool, g, out, added);

    res.trace.push_back({st.sol.objective, static_cast<int>(pool.entries.size()), added});
    res.value = st.sol.objective;
    res.solver_gap = st.sol.gap;
    if (added == 0) {
      res.converged = true;
      res.exactness = Exactness::Exact;
      res.active_cuts.clear();
      for (const auto& e : pool.entries) res.active_cuts.push_back(e.cut);
      return res;
    }
  }
  res.converged = false;
  res.exactness = Exactness::UpperBound;
  for (const auto& e : pool.entries) res.active_cuts.push_back(e.cut);
  return res;
}

BoundResult z_level(const Graph& g, const HierarchyConfig& cfg) {
  int n = g.order();
  int k = std::min(cfg.level, n);  // z_k(G) = z_n(G) for k > n
  if (k < 0) fail(Err::PreconditionViolated, "z_level: negative level");

  if (cfg.mode == HierarchyMode::Exhaustive) {
    if (binomial_capped(n, k, 1000000ULL) > 1000000ULL)
      fail(Err::CombinatorialBlowup,
           "z_level: C(n,k) exceeds the exhaustive guard of 1e6 subsets; use heuristic mode");
    HierarchyConfig sub = cfg;
    sub.level = k;
    return z_with_cuts(g, all_subsets(n, k), sub);
  }

  // heuristic: cycles of solve / search / add
  SdpProblem base = lifted_theta_problem(g);
  CutPool pool;
  BoundResult res;
  res.kind = BoundKind::Esh;
  res.exactness = Exactness::UpperBound;

  for (int cycle = 0; cycle <= cfg.cycles; ++cycle) {
    SolveState st = solve_with_pool(g, base, pool, cfg);
    res.value = st.sol.objective;
    res.solver_gap = st.sol.gap;
    if (st.sol.status != SdpStatus::Optimal && st.sol.status != SdpStatus::MaxIterations) {
      res.trace.push_back({st.sol.objective, static_cast<int>(pool.entries.size()), 0});
      res.converged = false;
      return res;
    }
    if (cycle == cfg.cycles) {
      res.trace.push_back({st.sol.objective, static_cast<int>(pool.entries.size()), 0});
      break;
    }

    std::vector<ViolatedSubset> found =
        find_violated(st.X, g, k, cfg.separation_budget, cfg.max_new_cuts,
                      cfg.seed + 0x100000001ULL * cycle, cfg.esc_tol, cfg.threads);
    pool.retire(st.sol.X, st.sol.u);
    int added = 0;
    for (const auto& v : found) {
      EscOutcome out = esc_check(st.X, g, v.I, cfg.esc_tol);
      if (!out.satisfied && out.violation > cfg.esc_tol) add_violated_cut(pool, g, out, added);
    }
    res.trace.push_back({st.sol.objective, static_cast<int>(pool.entries.size()), added});
    if (added == 0) {
      res.converged = true;
      break;
    }
  }
  for (const auto& e : pool.entries) res.active_cuts.push_back(e.cut);
  return res;
}

BoundResult vtesh_level(const Graph& g, const HierarchyConfig& cfg) {
  auto [lg, map] = local_graph(g, 0);
  (void)map;
  HierarchyConfig sub = cfg;
  sub.level = std::min(cfg.level, lg.order());  // z'_k = z'_{n-r-1} beyond the local order
  BoundResult res = z_level(lg, sub);
  res.kind = BoundKind::Vtesh;
  res.value += 1.0;
  for (auto& t : res.trace) t.objective += 1.0;
  return res;
}

std::pair<std::vector<double>, SymMatrix> embed_local_solution(
    const Graph& g, int anchor, const std::vector<double>& local_x, const SymMatrix& local_X,
    const std::vector<int>& vertex_map) {
  int n = g.order();
  int nl = static_cast<int>(vertex_map.size());
  if (anchor < 0 || anchor >= n) fail(Err::IndexOutOfRange, "embed_local_solution: anchor out of range");
  if (static_cast<int>(local_x.size()) != nl || local_X.order() != nl)
    fail(Err::OrderMismatch, "embed_local_solution: local dimensions disagree");
  Graph lg = induced_subgraph(g, vertex_map);
  if (!lifted_feasible(lg, local_x, local_X, 1e-6))
    fail(Err::InfeasibleInput, "embed_local_solution: local solution infeasible");

  std::vector<double> y(n, 0.0);
  SymMatrix Y(n);
  y[anchor] = 1.0;
  Y.set(anchor, anchor, 1.0);
  for (int j = 0; j < nl; ++j) {
    y[vertex_map[j]] = local_x[j];
    Y.set(std::min(anchor, vertex_map[j]), std::max(anchor, vertex_map[j]), local_x[j]);
  }
  for (int i = 0; i < nl; ++i)
    for (int j = i; j < nl; ++j) Y.set(vertex_map[i], vertex_map[j], local_X(i, j));
  return {y, Y};
}

}  // namespace paley
