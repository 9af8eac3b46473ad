#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paley/bounds.hpp"
#include "paley/errors.hpp"
#include "paley/gf.hpp"
#include "paley/graph.hpp"

using namespace paley;

TEST_CASE("hoffman_bound") {
  CHECK(hoffman_bound(paley_graph(13)) == doctest::Approx(std::sqrt(13.0)).epsilon(1e-7));
  // C_5: tau = -(1+sqrt 5)/2 in closed form
  double tau = -(1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(hoffman_bound(paley_graph(5)) == doctest::Approx(5.0 / (1.0 - 2.0 / tau)).epsilon(1e-9));
  CHECK(hoffman_bound(paley_graph(5)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));

  Graph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK(hoffman_bound(k4) == doctest::Approx(1.0).epsilon(1e-9));

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_THROWS_AS(hoffman_bound(path), Error);
  CHECK_THROWS_AS(hoffman_bound(Graph(4)), Error);
}

TEST_CASE("hanson_petridis") {
  CHECK(hanson_petridis(13) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(hanson_petridis(41) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(std::fabs(hanson_petridis(61) - 6.0) < 1e-9);
  CHECK(hanson_petridis(17) == doctest::Approx(3.3723).epsilon(1e-4));
  CHECK_THROWS_AS(hanson_petridis(9), Error);
}

TEST_CASE("maistrelli") {
  CHECK(maistrelli(13) == doctest::Approx(3.0));
  CHECK(maistrelli(29) == doctest::Approx(5.0));
  CHECK_THROWS_AS(maistrelli(9), Error);
  CHECK_THROWS_AS(maistrelli(5), Error);
  try {
    maistrelli(9);
  } catch (const Error& e) {
    CHECK(e.code() == Err::SquareOrder);
  }
}

TEST_CASE("cohen_lower") {
  double c61 = cohen_lower(61);
  CHECK(c61 <= 5.0);
  CHECK(cohen_lower(13) <= 3.0);
  CHECK(cohen_lower(1009) > cohen_lower(13));
}

TEST_CASE("b_M and b_M* against the local graph") {
  CHECK(b_m(41) == doctest::Approx(5.4721).epsilon(1e-4));
  CHECK(b_m_star(61) == doctest::Approx(5.8886).epsilon(1e-4));
  CHECK(b_m_star(41) <= b_m(41) + 1e-7);
}

TEST_CASE("assemble_report q=13") {
  BoundReport r = assemble_report(13);
  REQUIRE(r.alpha.has_value());
  CHECK(*r.alpha == 3);
  REQUIRE(r.theta.has_value());
  CHECK(*r.theta == doctest::Approx(3.6056).epsilon(3e-5));
  CHECK(*r.hoffman == doctest::Approx(std::sqrt(13.0)).epsilon(1e-6));
  CHECK(*r.maistrelli == doctest::Approx(3.0));
  CHECK(*r.hanson == doctest::Approx(3.0));
  REQUIRE(r.b_m.has_value());
  CHECK(*r.b_m == doctest::Approx(3.0).epsilon(1e-5));
  CHECK(r.ell == 3);
  // alpha below every upper bound
  for (double ub : {*r.theta, *r.hoffman, *r.maistrelli, *r.hanson, *r.b_m, *r.b_m_star})
    CHECK(*r.alpha <= ub + 1e-6);
  CHECK(*r.cohen <= *r.alpha + 1e-9);
}

TEST_CASE("assemble_report q=125 marks hanson inapplicable") {
  ReportOptions opt;
  opt.with_local = false;  // keep the test quick
  BoundReport r = assemble_report(125, opt);
  CHECK_FALSE(r.hanson.has_value());
  CHECK(r.skipped.count("hanson") == 1);
  REQUIRE(r.maistrelli.has_value());  // 125 = 5^3 is not a square
  CHECK(*r.maistrelli == doctest::Approx(11.0));
}

TEST_CASE("assemble_report q=9 square case") {
  ReportOptions opt;
  BoundReport r = assemble_report(9, opt);
  REQUIRE(r.alpha.has_value());
  CHECK(*r.alpha == 3);
  CHECK(*r.theta == doctest::Approx(3.0).epsilon(1e-6));
  CHECK_FALSE(r.maistrelli.has_value());
  CHECK_FALSE(r.hanson.has_value());
}

TEST_CASE("hoffman equals theta for Paley graphs") {
  for (int q : {13, 17}) {
    BoundReport r = assemble_report(q, {.with_alpha = false, .with_local = false, .sdp_tol = 1e-8});
    CHECK(std::fabs(*r.hoffman - *r.theta) <= 1e-5 * *r.theta);
  }
}
