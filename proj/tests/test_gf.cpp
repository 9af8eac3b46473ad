#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "paley/errors.hpp"
#include "paley/gf.hpp"

using namespace paley;

namespace {

// Independent oracle: the lexicographically first monic cubic over GF(p)
// with no root.  Degree 3 and rootless means irreducible, and tuples
// (c0, c1, c2) are swept in low-degree-first lex order.
std::vector<int> lex_first_irreducible_cubic(int p) {
  for (int c0 = 0; c0 < p; ++c0)
    for (int c1 = 0; c1 < p; ++c1)
      for (int c2 = 0; c2 < p; ++c2) {
        bool has_root = false;
        for (int x = 0; x < p && !has_root; ++x) {
          int v = c0;
          v = (v + c1 * x) % p;
          v = (v + c2 * x % p * x) % p;
          v = (v + x * x % p * x) % p;
          has_root = v == 0;
        }
        if (!has_root) return {c0, c1, c2, 1};
      }
  return {};
}

std::vector<int> paley_prime_powers_leq(int cap) {
  std::vector<int> qs;
  for (int q = 5; q <= cap; ++q) {
    if (q % 4 != 1) continue;
    try {
      factor_prime_power(q);
      qs.push_back(q);
    } catch (const Error&) {
    }
  }
  return qs;
}

}  // namespace

TEST_CASE("make_field basics") {
  PrimePowerField f13 = make_field(13, 1);
  CHECK(f13.q == 13);
  CHECK(f13.p == 13);

  PrimePowerField f125 = make_field(5, 3);
  CHECK(f125.q == 125);
  CHECK(f125.modulus_poly == lex_first_irreducible_cubic(5));

  CHECK_THROWS_AS(make_field(4, 1), Error);
  CHECK_THROWS_AS(make_field(2, 5), Error);
  try {
    make_field(4, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotPrime);
  }
}

TEST_CASE("field axioms, exhaustively for q <= 125") {
  for (auto [p, s] : std::vector<std::pair<int, int>>{{5, 1}, {13, 1}, {3, 2}, {5, 2}, {5, 3}, {3, 4}}) {
    PrimePowerField f = make_field(p, s);
    int q = f.q;
    // inverses exact: a * a^(q-2) = 1
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, field_pow(f, a, q - 2)) == 1);
    // Fermat: a^q = a
    for (int a = 0; a < q; ++a) CHECK(field_pow(f, a, q) == a);
    // commutativity + sampled associativity and distributivity
    for (int a = 0; a < q; a += 3)
      for (int b = 0; b < q; b += 5) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(a, b) == f.add(b, a));
        int c = (a * 7 + b * 11 + 3) % q;
        CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    // additive inverse
    for (int a = 0; a < q; ++a) CHECK(f.add(a, f.neg(a)) == 0);
  }
}

TEST_CASE("field_pow") {
  PrimePowerField f13 = make_field(13, 1);
  CHECK(field_pow(f13, 2, 6) == 12);
  CHECK(field_pow(f13, 7, 0) == 1);
  PrimePowerField f5 = make_field(5, 1);
  CHECK(field_pow(f5, 0, 3) == 0);
}

TEST_CASE("classify_residues") {
  PrimePowerField f5 = make_field(5, 1);
  CHECK(classify_residues(f5).residues == std::vector<int>{1, 4});

  PrimePowerField f13 = make_field(13, 1);
  CHECK(classify_residues(f13).residues == std::vector<int>{1, 3, 4, 9, 10, 12});

  // q = 9: oracle by exhaustive squaring
  PrimePowerField f9 = make_field(3, 2);
  std::set<int> squares;
  for (int a = 1; a < 9; ++a) squares.insert(f9.mul(a, a));
  ResidueClassification rc = classify_residues(f9);
  CHECK(std::set<int>(rc.residues.begin(), rc.residues.end()) == squares);
  CHECK(rc.residues.size() == 4);

  PrimePowerField f2 = make_field(2, 1);
  CHECK_THROWS_AS(classify_residues(f2), Error);
}

TEST_CASE("residues form a multiplicative subgroup") {
  for (int q : paley_prime_powers_leq(125)) {
    auto [p, s] = factor_prime_power(q);
    PrimePowerField f = make_field(p, s);
    ResidueClassification rc = classify_residues(f);
    CHECK(static_cast<int>(rc.residues.size()) == (q - 1) / 2);
    CHECK(static_cast<int>(rc.non_residues.size()) == (q - 1) / 2);
    for (int a : rc.residues)
      for (int b : rc.residues) CHECK(rc.is_residue[f.mul(a, b)]);
    // residue iff a square of a nonzero element
    std::set<int> squares;
    for (int a = 1; a < q; ++a) squares.insert(f.mul(a, a));
    CHECK(std::set<int>(rc.residues.begin(), rc.residues.end()) == squares);
  }
}

TEST_CASE("paley_graph construction") {
  Graph p5 = paley_graph(5);
  auto e5 = p5.edges();
  CHECK(e5 == std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});

  Graph p9 = paley_graph(9);
  auto srg9 = check_strongly_regular(p9);
  REQUIRE(srg9.has_value());
  CHECK(*srg9 == std::array<int, 4>{9, 4, 1, 2});

  CHECK(paley_graph(13).edge_count() == 39);

  CHECK_THROWS_AS(paley_graph(6), Error);
  CHECK_THROWS_AS(paley_graph(21), Error);
  try {
    paley_graph(21);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotPrimePower);
  }
}

TEST_CASE("strong regularity of all Paley graphs in range") {
  for (int q : paley_prime_powers_leq(125)) {
    auto srg = check_strongly_regular(paley_graph(q));
    REQUIRE(srg.has_value());
    CHECK(*srg == std::array<int, 4>{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4});
  }
}

TEST_CASE("local_graph") {
  Graph p5 = paley_graph(5);
  auto [l5, map5] = local_graph(p5, 0);
  CHECK(map5 == std::vector<int>{2, 3});
  CHECK(l5.edge_count() == 1);
  CHECK(l5.adjacent(0, 1));

  Graph p13 = paley_graph(13);
  auto [l13, map13] = local_graph(p13, 0);
  CHECK(l13.order() == 6);
  PrimePowerField f13 = make_field(13, 1);
  ResidueClassification rc = classify_residues(f13);
  CHECK(map13 == rc.non_residues);

  Graph empty(8);
  auto [le, me] = local_graph(empty, 0);
  CHECK(le.order() == 7);
}

TEST_CASE("self-complementarity witness for q <= 125") {
  for (int q : paley_prime_powers_leq(125)) {
    auto [p, s] = factor_prime_power(q);
    PrimePowerField f = make_field(p, s);
    ResidueClassification rc = classify_residues(f);
    int beta = rc.non_residues.front();
    Graph g = paley_graph(q);
    std::vector<int> phi(q);
    for (int i = 0; i < q; ++i) phi[i] = f.mul(beta, i);
    CHECK(check_isomorphism_map(g, complement(g), phi));
  }
}

TEST_CASE("local graph isomorphic to complement of residue subgraph, prime q") {
  for (int q : {13, 17, 29, 41, 61}) {
    PrimePowerField f = make_field(q, 1);
    ResidueClassification rc = classify_residues(f);
    Graph g = paley_graph(q);
    Graph lq = induced_subgraph(g, rc.residues);
    auto [gl, vmap] = local_graph(g, 0);
    CHECK(vmap == rc.non_residues);
    int beta = rc.non_residues.front();
    std::vector<int> phi(rc.residues.size());
    for (std::size_t a = 0; a < rc.residues.size(); ++a) {
      int image = f.mul(beta, rc.residues[a]);
      auto it = std::lower_bound(rc.non_residues.begin(), rc.non_residues.end(), image);
      REQUIRE(it != rc.non_residues.end());
      phi[a] = static_cast<int>(it - rc.non_residues.begin());
    }
    CHECK(check_isomorphism_map(complement(lq), gl, phi));
  }
}
