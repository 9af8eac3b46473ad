#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "paley/certify.hpp"
#include "paley/errors.hpp"
#include "paley/esc.hpp"
#include "paley/gf.hpp"
#include "paley/jacobi.hpp"
#include "paley/rng.hpp"

using namespace paley;

TEST_CASE("paley_theta_solution closed form") {
  PaleyThetaSolution s5 = paley_theta_solution(5);
  CHECK(s5.x_star[0] == doctest::Approx(0.4472135955).epsilon(1e-9));
  CHECK(s5.X_star(0, 2) == doctest::Approx(0.2763932023).epsilon(1e-9));  // 2 is a non-edge of 0

  PaleyThetaSolution s13 = paley_theta_solution(13);
  double obj = 0.0;
  for (double v : s13.x_star) obj += v;
  CHECK(obj == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));

  PaleyThetaSolution s9 = paley_theta_solution(9);
  std::vector<double> ev = jacobi_eigenvalues(s9.X_star);
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(ev[i]) < 1e-9);
  for (int i = 4; i < 8; ++i) CHECK(ev[i] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(ev[8] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("base certificate weights, q=13, I={0,2,5}") {
  // residues mod 13 are {1,3,4,9,10,12}: 2-0 and 5-0 are non-edges, 5-2 is an edge
  PaleyCertifier cert(13);
  EscWeights w = cert.base({0, 2, 5});
  double off = 2.0 / (13.0 + std::sqrt(13.0));
  CHECK(w.nu(0, 1) == doctest::Approx(off).epsilon(1e-12));
  CHECK(w.nu(0, 2) == doctest::Approx(off).epsilon(1e-12));
  CHECK(w.nu(1, 2) == doctest::Approx(0.0));
  for (double m : w.mu) CHECK(m >= 0.0);
  double minw = 0.0;
  CHECK(cert.verify(w, &minw) <= 1e-15);
  CHECK(minw >= 0.0);
}

TEST_CASE("base certificate at the cap level of P_29") {
  PaleyCertifier cert(29);
  REQUIRE(cert.level_cap() == 4);
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> I = sample_subset(rng, 29, 4);
    EscWeights w = cert.base(I);
    double minw = 0.0;
    CHECK(cert.verify(w, &minw) <= 1e-12);
    CHECK(minw >= -1e-12);
  }
}

TEST_CASE("base certificate exact rationals at square q") {
  PaleyCertifier cert(9);
  // adjacent pair: nu = 0, mu_i = 1/3 each, lambda = 1/3
  Graph g = paley_graph(9);
  std::vector<int> I;
  for (int j = 1; j < 9 && I.empty(); ++j)
    if (g.adjacent(0, j)) I = {0, j};
  EscWeights w = cert.base(I);
  CHECK(w.nu(0, 1) == doctest::Approx(0.0));
  CHECK(w.mu[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(w.mu[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(w.lambda == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(cert.verify(w) == 0.0);  // exact route
}

TEST_CASE("mu and lambda respect the proof bounds") {
  for (int q : {13, 29, 61}) {
    PaleyCertifier cert(q);
    double rq = std::sqrt(static_cast<double>(q));
    Rng rng(q);
    for (int trial = 0; trial < 20; ++trial) {
      int k = 2 + static_cast<int>(rng.below(cert.level_cap() - 1));
      std::vector<int> I = sample_subset(rng, q, k);
      EscWeights w = cert.base(I);
      double mu_floor = (rq + 3.0 - 2.0 * k) / (q + rq);
      for (double m : w.mu) CHECK(m >= mu_floor - 1e-12);
      CHECK(w.lambda >= 1.0 - k / rq - 1e-12);
    }
  }
}

TEST_CASE("base constructor rejects levels beyond the cap") {
  PaleyCertifier cert(13);
  CHECK_THROWS_AS(cert.base({0, 1, 2, 3}), Error);
  try {
    cert.base({0, 1, 2, 3});
  } catch (const Error& e) {
    CHECK(e.code() == Err::PreconditionViolated);
  }
}

TEST_CASE("plus1 certificates") {
  // q=29: ell+1 = 5; keep only subsets where every vertex has a neighbor
  PaleyCertifier c29(29);
  Rng rng(3);
  int case1_seen = 0;
  for (int trial = 0; trial < 200 && case1_seen < 10; ++trial) {
    std::vector<int> I = sample_subset(rng, 29, 5);
    bool isolated = false;
    for (int a = 0; a < 5 && !isolated; ++a) {
      bool nb = false;
      for (int b = 0; b < 5; ++b)
        if (a != b && c29.graph().adjacent(I[a], I[b])) nb = true;
      isolated = !nb;
    }
    if (isolated) continue;
    ++case1_seen;
    EscWeights w = c29.plus1(I);
    CHECK_FALSE(w.has_sigma);
    double minw = 0.0;
    CHECK(c29.verify(w, &minw) <= 1e-12);
    CHECK(minw >= -1e-12);
  }
  CHECK(case1_seen == 10);

  // q=101 (alpha=5 < ell=6): random subsets of size 7, both cases
  PaleyCertifier c101(101);
  Rng rng2(17);
  int with_sigma = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> I = sample_subset(rng2, 101, 7);
    EscWeights w = c101.plus1(I);
    double minw = 0.0;
    CHECK(c101.verify(w, &minw) <= 1e-12);
    CHECK(minw >= -1e-12);
    if (w.has_sigma) {
      ++with_sigma;
      CHECK(w.sigma == doctest::Approx(2.0 / (101.0 + std::sqrt(101.0))).epsilon(1e-12));
      CHECK(w.S.size() >= 3);
    }
  }
  CHECK(with_sigma > 0);
}

TEST_CASE("certificates agree with the hull LP") {
  PaleyCertifier cert(13);
  Graph g = cert.graph();
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 2 + static_cast<int>(rng.below(2));
    std::vector<int> I = sample_subset(rng, 13, k);
    EscWeights w = cert.base(I);
    (void)w;
    CHECK(esc_check(cert.solution().X_star, g, I, 1e-9).satisfied);
  }
}

TEST_CASE("verify_stagnation certified levels") {
  StagnationReport r2 = verify_stagnation(13, 2, 0);
  CHECK(r2.exhaustive);
  CHECK(r2.checked == 78);
  CHECK(r2.passed == r2.checked);
  CHECK(r2.max_recon_error <= 1e-12);
  CHECK(r2.min_weight >= -1e-12);

  StagnationReport r3 = verify_stagnation(13, 3, 0);
  CHECK(r3.checked == 286);
  CHECK(r3.passed == 286);

  StagnationReport r9 = verify_stagnation(9, 3, 0);
  CHECK(r9.passed == r9.checked);
  CHECK(r9.max_recon_error == 0.0);  // exact rational route

  StagnationReport s61 = verify_stagnation(61, 5, 500, 20250101, 2);
  CHECK(s61.checked == 500);
  CHECK(s61.passed == 500);
}

TEST_CASE("level beyond the theorem fails visibly for q=13") {
  StagnationReport r = verify_stagnation(13, 4, 0);
  CHECK(r.used_lp_scan);
  CHECK(r.checked == 715);
  CHECK(r.passed < r.checked);
  CHECK_FALSE(r.failures.empty());
}
