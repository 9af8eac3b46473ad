#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paley {

// Simple undirected graph over vertices {0,...,n-1}, adjacency kept as one
// bitset row per vertex.
class Graph {
 public:
  Graph() : n_(0), words_(0) {}
  explicit Graph(int n)
      : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

  int order() const { return n_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
  }
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  const uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  int words() const { return words_; }

 private:
  uint64_t* row_mut(int v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }

  int n_;
  int words_;
  std::vector<uint64_t> adj_;
};

struct StableSetList {
  std::vector<std::vector<int>> sets;
  bool complete = true;
};

Graph induced_subgraph(const Graph& g, const std::vector<int>& I);
Graph complement(const Graph& g);

// Exact maximum stable set by bitset branch-and-bound; returns the size and
// the lexicographically smallest witness of that size.  Requires n <= 128.
std::pair<int, std::vector<int>> brute_force_alpha(const Graph& g);

// All stable subsets (including the empty set) in lexicographic order of
// their incidence vectors (s_0 is the most significant position).  Stops at
// `cap` sets with complete = false.
StableSetList enumerate_stable_sets(const Graph& g, std::size_t cap = ~std::size_t(0));

// Adjacency eigenvalues, ascending, by cyclic Jacobi.  n <= 256.
std::vector<double> spectrum(const Graph& g);

// (n, r, a, c) if strongly regular, absent otherwise.
std::optional<std::array<int, 4>> check_strongly_regular(const Graph& g);

// True iff pi maps edges of g exactly onto edges of h.
bool check_isomorphism_map(const Graph& g, const Graph& h, const std::vector<int>& pi);

}  // namespace paley
