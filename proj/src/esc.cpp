#include "paley/esc.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "paley/errors.hpp"
#include "paley/parallel.hpp"
#include "paley/rng.hpp"

namespace paley {

std::vector<SymMatrix> stab2_vertices(const Graph& g, const std::vector<int>& I) {
  if (I.size() > 16) fail(Err::SubsetTooLarge, "stab2_vertices: |I| > 16");
  Graph sub = induced_subgraph(g, I);
  StableSetList sets = enumerate_stable_sets(sub);
  int k = sub.order();
  std::vector<SymMatrix> out;
  out.reserve(sets.sets.size());
  for (const auto& s : sets.sets) {
    SymMatrix m(k);
    for (int a : s)
      for (int b : s)
        if (a <= b) m.set(a, b, 1.0);
    out.push_back(std::move(m));
  }
  return out;
}

EscOutcome esc_check(const SymMatrix& x, const Graph& g, const std::vector<int>& I, double tol) {
  if (I.size() > 16) fail(Err::SubsetTooLarge, "esc_check: |I| > 16");
  int k = static_cast<int>(I.size());
  SymMatrix xi(k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) xi.set(a, b, x(I[a], I[b]));

  std::vector<SymMatrix> verts = stab2_vertices(g, I);
  std::vector<std::vector<double>> points;
  points.reserve(verts.size());
  for (const auto& v : verts) points.push_back(v.upper_vector());

  MembershipResult r = hull_membership(points, xi.upper_vector(), tol);
  EscOutcome out;
  if (r.inside) {
    out.satisfied = true;
    out.weights = std::move(r.weights);
    return out;
  }
  // unpack the upper-triangle hyperplane into a symmetric matrix with the
  // full inner-product convention, then renormalize to max |H| = 1
  SymMatrix h(k);
  std::size_t idx = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b, ++idx) h.set(a, b, a == b ? r.hyperplane[idx] : 0.5 * r.hyperplane[idx]);
  double scale = h.max_abs();
  h.scale(1.0 / scale);
  out.satisfied = false;
  out.cut.I = I;
  out.cut.H = h;
  out.cut.h = r.offset / scale;
  out.violation = (inner(h, xi) - out.cut.h);
  return out;
}

namespace {

CutPlane make_cut(std::vector<int> I, const SymMatrix& h, double rhs) {
  CutPlane c;
  c.I = std::move(I);
  c.H = h;
  c.h = rhs;
  return c;
}

}  // namespace

std::array<CutPlane, 4> esc_ineq_k2(int i, int j) {
  if (i == j) fail(Err::IndexOutOfRange, "esc_ineq_k2: indices must differ");
  std::vector<int> I = {std::min(i, j), std::max(i, j)};
  SymMatrix nonneg(2), le_ii(2), le_jj(2), size2(2);
  nonneg.set(0, 1, -0.5);                          // -X_ij <= 0
  le_ii.set(0, 1, 0.5);                            // X_ij - X_ii <= 0
  le_ii.set(0, 0, -1.0);
  le_jj.set(0, 1, 0.5);                            // X_ij - X_jj <= 0
  le_jj.set(1, 1, -1.0);
  size2.set(0, 0, 1.0);                            // X_ii + X_jj - X_ij <= 1
  size2.set(1, 1, 1.0);
  size2.set(0, 1, -0.5);
  return {make_cut(I, nonneg, 0.0), make_cut(I, le_ii, 0.0), make_cut(I, le_jj, 0.0),
          make_cut(I, size2, 1.0)};
}

std::array<CutPlane, 4> esc_ineq_k3(int i, int j, int l) {
  if (i == j || i == l || j == l) fail(Err::IndexOutOfRange, "esc_ineq_k3: indices must differ");
  std::vector<int> I = {i, j, l};
  std::sort(I.begin(), I.end());
  // triangle inequality X_ab + X_ac <= X_aa + X_bc for each apex a
  auto triangle = [&](int a, int b, int c) {
    SymMatrix h(3);
    h.set(std::min(a, b), std::max(a, b), 0.5);
    h.set(std::min(a, c), std::max(a, c), 0.5);
    h.set(a, a, -1.0);
    h.set(std::min(b, c), std::max(b, c), -0.5);
    return make_cut(I, h, 0.0);
  };
  SymMatrix size3(3);
  for (int a = 0; a < 3; ++a) size3.set(a, a, 1.0);
  size3.set(0, 1, -0.5);
  size3.set(0, 2, -0.5);
  size3.set(1, 2, -0.5);
  return {triangle(0, 1, 2), triangle(1, 0, 2), triangle(2, 0, 1), make_cut(I, size3, 1.0)};
}

namespace {

struct Found {
  std::map<std::vector<int>, double> by_subset;
};

double subset_violation(const SymMatrix& x, const Graph& g, const std::vector<int>& I,
                        double tol, std::map<std::vector<int>, double>& cache) {
  auto it = cache.find(I);
  if (it != cache.end()) return it->second;
  EscOutcome out = esc_check(x, g, I, tol);
  double v = out.satisfied ? 0.0 : out.violation;
  cache.emplace(I, v);
  return v;
}

}  // namespace

std::vector<ViolatedSubset> find_violated(const SymMatrix& x, const Graph& g, int k, long budget,
                                          int top_m, uint64_t seed, double tol, int threads) {
  if (k > 16) fail(Err::SubsetTooLarge, "find_violated: k > 16");
  if (budget < 1) fail(Err::PreconditionViolated, "find_violated: budget must be >= 1");
  int n = g.order();
  if (k > n) k = n;

  const long moves_per_restart = 40 + 10L * k;
  const long restarts = std::max<long>(1, budget / moves_per_restart);

  std::vector<Found> per_worker(std::max(threads, 1));
  parallel_for(threads, static_cast<std::size_t>(restarts),
               [&](std::size_t w, std::size_t lo, std::size_t hi) {
    Found& found = per_worker[w];
    std::map<std::vector<int>, double> cache;
    for (std::size_t restart = lo; restart < hi; ++restart) {
      Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (restart + 1)));
      std::vector<int> cur = sample_subset(rng, n, k);
      double cur_v = subset_violation(x, g, cur, tol, cache);
      if (cur_v > tol) found.by_subset.emplace(cur, cur_v);
      double temp = std::max(cur_v, 1e-3);
      for (long move = 0; move < moves_per_restart; ++move) {
        if (move > 0 && move % 50 == 0) temp *= 0.95;
        int out_pos = static_cast<int>(rng.below(static_cast<uint64_t>(k)));
        int in_v = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        bool present = std::binary_search(cur.begin(), cur.end(), in_v);
        if (present) continue;
        std::vector<int> cand = cur;
        cand[out_pos] = in_v;
        std::sort(cand.begin(), cand.end());
        double cand_v = subset_violation(x, g, cand, tol, cache);
        if (cand_v > tol) found.by_subset.emplace(cand, cand_v);
        double delta = cand_v - cur_v;
        if (delta > 0 || rng.uniform() < std::exp(delta / temp)) {
          cur = std::move(cand);
          cur_v = cand_v;
        }
      }
    }
  });

  std::map<std::vector<int>, double> merged;
  for (const auto& w : per_worker)
    for (const auto& [I, v] : w.by_subset) merged.emplace(I, v);

  std::vector<ViolatedSubset> out;
  out.reserve(merged.size());
  for (const auto& [I, v] : merged) out.push_back({I, v});
  std::stable_sort(out.begin(), out.end(), [](const ViolatedSubset& a, const ViolatedSubset& b) {
    if (a.violation != b.violation) return a.violation > b.violation;
    return a.I < b.I;
  });
  if (static_cast<int>(out.size()) > top_m) out.resize(top_m);
  return out;
}

}  // namespace paley
