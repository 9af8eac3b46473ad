#include "paley/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

#include "paley/errors.hpp"
#include "paley/jacobi.hpp"
#include "paley/symmat.hpp"

namespace paley {

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    fail(Err::IndexOutOfRange, "add_edge: bad vertex pair");
  row_mut(u)[v >> 6] |= 1ULL << (v & 63);
  row_mut(v)[u >> 6] |= 1ULL << (u & 63);
}

int Graph::degree(int v) const {
  int d = 0;
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) e.emplace_back(u, v);
  return e;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& I) {
  for (std::size_t t = 0; t < I.size(); ++t) {
    if (I[t] < 0 || I[t] >= g.order()) fail(Err::IndexOutOfRange, "induced_subgraph: vertex out of range");
    if (t > 0 && I[t] <= I[t - 1]) fail(Err::IndexOutOfRange, "induced_subgraph: I must be strictly increasing");
  }
  Graph h(static_cast<int>(I.size()));
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = a + 1; b < I.size(); ++b)
      if (g.adjacent(I[a], I[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

namespace {

// 128-bit vertex mask for the stable set search.
struct Mask {
  uint64_t w0 = 0, w1 = 0;
  int count() const { return std::popcount(w0) + std::popcount(w1); }
  bool any() const { return (w0 | w1) != 0; }
  bool get(int i) const { return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1ULL) != 0; }
  void clear(int i) {
    if (i < 64)
      w0 &= ~(1ULL << i);
    else
      w1 &= ~(1ULL << (i - 64));
  }
  Mask and_not(const Mask& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
  Mask intersect(const Mask& o) const { return {w0 & o.w0, w1 & o.w1}; }
};

struct AlphaSearch {
  int n = 0;
  std::vector<Mask> nbr;  // closed neighborhood masks
  std::vector<Mask> open;
  int best = 0;

  int pick(const Mask& p) const {
    // highest degree within the candidate set, lowest index on ties
    int bestv = -1, bestd = -1;
    for (int v = 0; v < n; ++v) {
      if (!p.get(v)) continue;
      int d = open[v].intersect(p).count();
      if (d > bestd) {
        bestd = d;
        bestv = v;
      }
    }
    return bestv;
  }

  void expand(Mask p, int size) {
    if (size > best) best = size;
    if (!p.any()) return;
    if (size + p.count() <= best) return;
    int v = pick(p);
    expand(p.and_not(nbr[v]), size + 1);  // include branch first
    Mask q = p;
    q.clear(v);
    if (size + q.count() > best) expand(q, size);
  }

  // Is there a stable set of `need` more vertices inside p?
  bool reachable(Mask p, int need) {
    if (need == 0) return true;
    if (p.count() < need) return false;
    int v = pick(p);
    if (reachable(p.and_not(nbr[v]), need - 1)) return true;
    Mask q = p;
    q.clear(v);
    return reachable(q, need);
  }
};

}  // namespace

std::pair<int, std::vector<int>> brute_force_alpha(const Graph& g) {
  int n = g.order();
  if (n > 128) fail(Err::TooLarge, "brute_force_alpha requires n <= 128");
  AlphaSearch s;
  s.n = n;
  s.nbr.resize(n);
  s.open.resize(n);
  for (int v = 0; v < n; ++v) {
    Mask m;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(u, v)) {
        if (u < 64)
          m.w0 |= 1ULL << u;
        else
          m.w1 |= 1ULL << (u - 64);
      }
    s.open[v] = m;
    if (v < 64)
      m.w0 |= 1ULL << v;
    else
      m.w1 |= 1ULL << (v - 64);
    s.nbr[v] = m;
  }
  Mask all;
  for (int v = 0; v < n; ++v) {
    if (v < 64)
      all.w0 |= 1ULL << v;
    else
      all.w1 |= 1ULL << (v - 64);
  }
  s.expand(all, 0);
  int alpha = s.best;

  // Second pass: grow the lexicographically smallest witness greedily.
  std::vector<int> witness;
  Mask p = all;
  int have = 0;
  for (int v = 0; v < n && have < alpha; ++v) {
    if (!p.get(v)) continue;
    Mask q = p.and_not(s.nbr[v]);
    if (s.reachable(q, alpha - have - 1)) {
      witness.push_back(v);
      ++have;
      p = q;
    } else {
      p.clear(v);
    }
  }
  return {alpha, witness};
}

namespace {

void enum_rec(const Graph& g, int v, std::vector<int>& cur, std::vector<char>& blocked,
              StableSetList& out, std::size_t cap) {
  if (!out.complete) return;
  if (v == g.order()) {
    if (out.sets.size() >= cap) {
      out.complete = false;
      return;
    }
    out.sets.push_back(cur);
    return;
  }
  enum_rec(g, v + 1, cur, blocked, out, cap);  // s_v = 0 first: ascending incidence order
  if (!blocked[v] && out.complete) {
    std::vector<int> newly;
    for (int u = v + 1; u < g.order(); ++u)
      if (!blocked[u] && g.adjacent(u, v)) {
        blocked[u] = 1;
        newly.push_back(u);
      }
    cur.push_back(v);
    enum_rec(g, v + 1, cur, blocked, out, cap);
    cur.pop_back();
    for (int u : newly) blocked[u] = 0;
  }
}

}  // namespace

StableSetList enumerate_stable_sets(const Graph& g, std::size_t cap) {
  StableSetList out;
  std::vector<int> cur;
  std::vector<char> blocked(g.order(), 0);
  enum_rec(g, 0, cur, blocked, out, cap);
  return out;
}

std::vector<double> spectrum(const Graph& g) {
  if (g.order() > 256) fail(Err::TooLarge, "spectrum requires n <= 256");
  SymMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return jacobi_eigenvalues(a);
}

std::optional<std::array<int, 4>> check_strongly_regular(const Graph& g) {
  int n = g.order();
  if (n == 0) return std::nullopt;
  int r = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != r) return std::nullopt;
  if (r == 0 || r == n - 1) return std::nullopt;  // empty or complete
  int a = -1, c = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w = 0; w < g.words(); ++w) common += std::popcount(g.row(u)[w] & g.row(v)[w]);
      if (g.adjacent(u, v)) {
        if (a < 0)
          a = common;
        else if (a != common)
          return std::nullopt;
      } else {
        if (c < 0)
          c = common;
        else if (c != common)
          return std::nullopt;
      }
    }
  return std::array<int, 4>{n, r, a, c};
}

bool check_isomorphism_map(const Graph& g, const Graph& h, const std::vector<int>& pi) {
  if (g.order() != h.order()) fail(Err::OrderMismatch, "check_isomorphism_map: order mismatch");
  int n = g.order();
  if (static_cast<int>(pi.size()) != n) fail(Err::OrderMismatch, "check_isomorphism_map: map size mismatch");
  std::vector<char> seen(n, 0);
  for (int v : pi) {
    if (v < 0 || v >= n || seen[v]) fail(Err::OrderMismatch, "check_isomorphism_map: not a bijection");
    seen[v] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(pi[u], pi[v])) return false;
  return true;
}

}  // namespace paley
