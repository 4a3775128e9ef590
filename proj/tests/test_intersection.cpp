#include <doctest.h>

#include "semilie/grid.hpp"
#include "semilie/intersection.hpp"
#include "semilie/json_io.hpp"
#include "support.hpp"

using namespace semilie;
using testing_support::poly;

namespace {

// GK(n1, n2) at a numeric q, accumulated with integer arithmetic.
long naive_gk(int n1, int n2, long q) {
  if (n1 < 0) return 0;
  long acc = 0, qj = 1;
  for (int j = 0; 2 * j + 1 <= n1; ++j) {
    acc += qj * (n1 + n2 - 4 * j);
    qj *= q;
  }
  if (n1 % 2 == 0) acc += qj * (n2 - n1 + 1) / 2;
  return acc;
}

SweepConfig small_grid() {
  SweepConfig cfg;
  cfg.rs = int_range(0, 4);
  cfg.sums = {1, 3, 5, 9};
  cfg.vb_min = 0;
  cfg.ves = int_range(0, 7);
  cfg.vdas = {0, 1, 2, 4, kInf};
  return cfg;
}

}  // namespace

TEST_CASE("gross_keating examples") {
  CHECK(gross_keating({1, 1}) == QPolynomial(2));
  CHECK(gross_keating({2, 3}) == poly("q + 5"));
  CHECK(gross_keating({0, 5}) == QPolynomial(3));
  CHECK(gross_keating({-1, -1}).is_zero());
  CHECK(gross_keating({-1, 7}).is_zero());
  CHECK_THROWS_AS(gross_keating({3, 2}), std::invalid_argument);
  for (int n1 = 0; n1 <= 8; ++n1)
    for (int n2 = n1; n2 <= n1 + 9; ++n2) {
      if ((n1 % 2 == 0) && (n2 - n1) % 2 == 0) continue;  // (n2 - n1 + 1)/2 must be integral
      for (long q : {3, 5}) CHECK(gross_keating({n1, n2}).evaluate(q) == naive_gk(n1, n2, q));
    }
}

TEST_CASE("gk_from_params") {
  GKPair g = gk_from_params({0, 0, 3, 1, 1});
  CHECK(g.n1 == 2);
  CHECK(g.n2 == 3);
  g = gk_from_params({1, 1, 2, 0, 0});
  CHECK(g.n1 == 0);
  CHECK(g.n2 == 5);
  CHECK(gk_from_params(OrbitalParams{0, 0, 1, 0, 0}.with_ve(-1)).empty());
  CHECK(gross_keating(gk_from_params(OrbitalParams{0, 0, 1, 0, 0}.with_ve(-1))).is_zero());
  for_each_params(small_grid(), [](const OrbitalParams& p) {
    GKPair gp = gk_from_params(p);
    REQUIRE(gp.n1 + gp.n2 == 2 * p.ve + p.sum() + 2 * p.r);
    REQUIRE(0 <= gp.n1);
    REQUIRE(gp.n1 <= gp.n2);
  });
}

TEST_CASE("int_circ and int_total examples") {
  CHECK(int_circ({0, 0, 3, 1, 1}) == poly("q + 3"));
  CHECK(int_circ({1, 1, 2, 0, 0}) == QPolynomial(3));
  CHECK_THROWS_AS(int_circ(OrbitalParams{0, 0, 1, 0, 0}.with_ve(-1)), InvalidParams);
  CHECK_THROWS_AS(int_total(OrbitalParams{0, 0, 1, 0, 0}.with_ve(-1)), InvalidParams);
  CHECK(int_total({0, 0, 3, 1, 1}) == poly("q + 3"));
  CHECK(int_total({0, 0, 1, 0, 0}) == QPolynomial(1));
}

TEST_CASE("int_circ_kr_closed cases") {
  CHECK(int_circ_kr_closed({1, 0, 3, 1, 0}) == poly("2q + 3"));
  CHECK(int_circ({1, 0, 3, 1, 0}) == poly("2q + 4"));
  CHECK(int_circ({0, 0, 3, 1, 0}) == QPolynomial(1));
  CHECK(int_circ_kr_closed({1, 0, 1, 3, 1}) == poly("2q"));
  CHECK(int_circ_kr_closed({1, 0, 1, 3, 4}) == poly("2q"));
  CHECK(int_circ_kr_closed({1, 0, 5, 1, 3}) == poly("q + 1"));
  CHECK_THROWS_AS(int_circ_kr_closed({0, 0, 1, 1, 0}), InvalidParams);
  CHECK_THROWS_AS(int_circ_kr_closed({1, 0, 1, 0, 0}), InvalidParams);
}

TEST_CASE("int_circ_kr_closed outside its hypothesis") {
  // v(Nm u) = 0 is excluded by the formula's hypothesis; the GK difference is 1 there.
  OrbitalParams p{1, 0, 1, 0, 0};
  CHECK(int_circ(p) - int_circ(p.with_r(0)) == QPolynomial(1));
}

TEST_CASE("geometric translation") {
  OrbitalValuations o = geom_to_orbital({1, 1, 1});
  CHECK(o.sum_bc == 3);
  CHECK(o.ve == 1);
  CHECK(o.vda == 1);
  o = geom_to_orbital({0, 0, kInf});
  CHECK(o.sum_bc == 1);
  CHECK(o.ve == 0);
  CHECK(is_inf(o.vda));
  for (int nm = 0; nm <= 5; ++nm)
    for (int beta = 0; beta <= 4; ++beta)
      for (int ad : {0, 1, 2, 3, kInf})
        for (int r = 1; r <= 4; ++r) {
          OrbitalValuations ov = geom_to_orbital({nm, beta, ad});
          OrbitalParams p{r, 0, ov.sum_bc, ov.ve, ov.vda};
          CHECK(geometric_n({nm, beta, ad}, r) == n_of(p));
        }
}

TEST_CASE("identity reports") {
  IdentityReport m = verify_miracle({0, 0, 3, 1, 1});
  CHECK(m.pass);
  CHECK(m.lhs == poly("q + 5"));
  CHECK(m.rhs == poly("q + 5"));
  CHECK(verify_miracle({0, 0, 1, 0, 0}).lhs == QPolynomial(1));
  CHECK(verify_miracle({0, 0, 1, 0, 0}).pass);
  json j = report_to_json(m);
  CHECK(j["pass"] == true);
  CHECK(poly_from_json(j["lhs"]) == m.lhs);
  CHECK(j["params"]["vda"] == 1);
  CHECK(params_to_json({0, 0, 1, 0, kInf})["vda"] == "inf");
}

TEST_CASE("identities on a small grid") {
  for_each_params(small_grid(), [](const OrbitalParams& p) {
    REQUIRE_MESSAGE(verify_miracle(p).pass, p.to_string());
    REQUIRE_MESSAGE(verify_int_total(p).pass, p.to_string());
    if (p.r >= 1) REQUIRE_MESSAGE(verify_afl(p).pass, p.to_string());
    if (p.r >= 1 && p.ve >= 1) REQUIRE_MESSAGE(verify_clean_intersection(p).pass, p.to_string());
  });
}

TEST_CASE("AFL report sides") {
  OrbitalParams p{3, 1, 4, 5, 2};
  IdentityReport rep = verify_afl(p);
  CHECK(rep.pass);
  CHECK(rep.lhs == QPolynomial(sign_pow(p.r)) * derivative_combo(p));
}
