#include <doctest.h>

#include <string>
#include <vector>

#include "semilie/json_io.hpp"
#include "semilie/kernel.hpp"
#include "kernel_tables.hpp"
#include "support.hpp"

using namespace semilie;
using testing_support::poly;
using namespace kernel_tables;

namespace {

void check_block(const PolyMatrix& m, const Table& expected, const char* label) {
  REQUIRE(m.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i)
    for (size_t j = 0; j < expected[i].size(); ++j)
      CHECK_MESSAGE(m[i][j] == poly(expected[i][j]), label << " (" << i << "," << j << ") is " << m[i][j].to_string());
}

}  // namespace

TEST_CASE("displayed matrices for sum 1, vda 0") {
  DerivMatrix dm = build_matrix(1, 0, 4);
  CHECK(dm.theta == 0);
  CHECK(dm.rows() == 6);
  CHECK(dm.cols() == 5);
  RowReduction red = row_reduce(dm);
  check_block(dm.m, kM_1_0, "M");
  check_block(red.m1, kM1_1_0, "M'");
  check_block(red.m2, kM2_1_0, "M''");
}

TEST_CASE("displayed matrices for sum 17, vda 2") {
  DerivMatrix dm = build_matrix(17, 2, 4);
  CHECK(dm.theta == 4);
  CHECK(dm.rows() == 8);
  RowReduction red = row_reduce(dm);
  check_block(dm.m, kM_17_2, "M");
  check_block(red.m1, kM1_17_2, "M'");
  check_block(red.m2, kM2_17_2, "M''");
}

TEST_CASE("displayed matrices for sum 5, vda 8") {
  DerivMatrix dm = build_matrix(5, 8, 4);
  CHECK(dm.theta == 5);
  CHECK(dm.rows() == 8);
  RowReduction red = row_reduce(dm);
  check_block(dm.m, kM_5_8, "M");
  check_block(red.m1, kM1_5_8, "M'");
  check_block(red.m2, kM2_5_8, "M''");
}

TEST_CASE("build_matrix rejects bad input") {
  CHECK_THROWS_AS(build_matrix(2, 0, 4), InvalidParams);
  CHECK_THROWS_AS(build_matrix(1, -1, 4), InvalidParams);
  CHECK_THROWS_AS(build_matrix(1, 0, -1), InvalidParams);
}

TEST_CASE("rank certificates for the displayed cases") {
  RankCertificate odd = certify_full_rank(build_matrix(5, 8, 4));
  CHECK(odd.full_rank);
  CHECK(odd.rank == 5);
  CHECK(odd.pivot_product == poly("q^15") * poly("q - 1") * poly("q - 1") * poly("q - 1") * poly("q - 1") * poly("q - 1"));

  RankCertificate even = certify_full_rank(build_matrix(17, 2, 4));
  CHECK(even.full_rank);
  QPolynomial expected(1);
  for (int r = 0; r <= 4; ++r) expected *= poly("-6q - 7") * QPolynomial::monomial(1, r + 1);
  CHECK(even.pivot_product == expected);

  RankCertificate edge = certify_full_rank(build_matrix(1, 0, 4));
  CHECK(edge.full_rank);
  CHECK(edge.pivot_rows.front() == 0);
  CHECK(edge.pivot_product == poly("q^6"));
}

TEST_CASE("certify_full_rank over the parameter set") {
  for (int sum : {1, 3, 5, 17})
    for (int vda : {0, 1, 2, 8})
      for (int n = 1; n <= 6; ++n) {
        RankCertificate c = certify_full_rank(build_matrix(sum, vda, n));
        CHECK_MESSAGE(c.full_rank, sum << " " << vda << " " << n);
        CHECK(c.rank == n + 1);
        for (int q : {3, 5, 7}) CHECK(c.pivot_product.evaluate(q) != 0);
      }
}

TEST_CASE("M'' vanishes below the anti-diagonal on random parameters") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> half(0, 12), vd(0, 9), nn(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    int sum = 2 * half(rng) + 1, vda = vd(rng), n = nn(rng);
    DerivMatrix dm = build_matrix(sum, vda, n);
    RowReduction red = row_reduce(dm);
    int h = dm.theta / 2;
    for (int r = 0; r <= n; ++r)
      for (int i = r + h + 2; i < dm.rows(); ++i) CHECK(red.m2[i][r].is_zero());
  }
}

TEST_CASE("bareiss rank") {
  PolyMatrix singular{{poly("q"), poly("q^2")}, {poly("1"), poly("q")}};
  CHECK(bareiss_rank(singular) == 1);
  PolyMatrix full{{poly("q"), poly("1")}, {poly("1"), poly("q")}};
  CHECK(bareiss_rank(full) == 2);
  PolyMatrix zero_first{{poly("0"), poly("1")}, {poly("q + 1"), poly("2")}};
  CHECK(bareiss_rank(zero_first) == 2);
  CHECK(bareiss_rank({}) == 0);
  PolyMatrix tall{{poly("1"), poly("2")}, {poly("2"), poly("4")}, {poly("3"), poly("6")}};
  CHECK(bareiss_rank(tall) == 1);
}

TEST_CASE("large-r vanishing") {
  for (int ve = 0; ve <= 6; ++ve)
    for (int sum : {1, 3, 7})
      for (int vda : {0, 2, kInf}) {
        OrbitalParams base{0, 0, sum, ve, vda};
        for (int r = ve + 2; r <= ve + 8; ++r) {
          VanishingReport rep = test_large_r_vanishing(base.with_r(r));
          CHECK(rep.asserted);
          CHECK(rep.pass);
          CHECK(rep.value.is_zero());
        }
      }
  VanishingReport below = test_large_r_vanishing(OrbitalParams{4, 0, 3, 3, 0});
  CHECK_FALSE(below.asserted);
  CHECK(below.pass);
  CHECK_FALSE(below.value.is_zero());
}

TEST_CASE("phi sequence") {
  OrbitalParams base{0, 0, 3, 6, 1};
  CHECK(phi_window_start(base) == 7);
  for (int r = 5; r <= 20; ++r) {
    VanishingReport rep = test_phi_sequence(base, r);
    bool in_window = r >= 7 && r <= 9;
    CHECK(rep.asserted == !in_window);
    CHECK(rep.pass);
    if (!in_window) CHECK(rep.value.is_zero());
  }
  CHECK_THROWS_AS(test_phi_sequence(base, 4), InvalidParams);
  HeckeVector phi = phi_vector(5);
  CHECK(phi.coeffs().at(3) == poly("-q^2"));
}

TEST_CASE("matrix output") {
  DerivMatrix dm = build_matrix(1, 0, 1);
  json j = matrix_to_json(dm.m);
  CHECK(j.size() == static_cast<size_t>(dm.rows()));
  CHECK(poly_from_json(j[1][1]) == poly("q + 3"));
  CHECK(matrix_to_string({{poly("1"), poly("q + 3")}}) == "1 | q + 3\n");
}
