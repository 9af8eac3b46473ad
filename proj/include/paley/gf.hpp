#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "paley/graph.hpp"

namespace paley {

// GF(p^s) with elements encoded as integers 0..q-1 read as little-endian
// base-p digit vectors (digit i = coefficient of x^i).  The modulus is the
// lexicographically smallest monic irreducible polynomial of degree s over
// GF(p), coefficients compared low-degree-first, so a field is the same on
// every machine.  Multiplication runs through log/antilog tables over the
// smallest generator.
struct PrimePowerField {
  int p = 0;
  int s = 0;
  int q = 0;
  std::vector<int> modulus_poly;  // s+1 coefficients, monic; unused content for s = 1
  int generator = 0;
  std::vector<int> log_t;  // log_t[a] for a != 0
  std::vector<int> exp_t;  // exp_t[k] = generator^k, k in [0, q-1)

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const { return sub(0, a); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_t[(log_t[a] + log_t[b]) % (q - 1)];
  }
};

PrimePowerField make_field(int p, int s);

int field_pow(const PrimePowerField& f, int a, uint64_t e);

struct ResidueClassification {
  std::vector<int> residues;      // nonzero squares, ascending
  std::vector<int> non_residues;  // the rest of the nonzero elements, ascending
  std::vector<char> is_residue;   // indexed by element
};

ResidueClassification classify_residues(const PrimePowerField& f);

bool is_prime(int n);
// (p, s) with q = p^s, or NotPrimePower.
std::pair<int, int> factor_prime_power(int q);

// Paley graph on GF(q); requires q = p^s with q = 1 (mod 4).
Graph paley_graph(int q);

// Induced subgraph on V minus the closed neighborhood of `anchor`, plus the
// map from local vertex indices to original labels (ascending).
std::pair<Graph, std::vector<int>> local_graph(const Graph& g, int anchor);

}  // namespace paley
