#pragma once

#include <string>
#include <vector>

#include "semilie/orbital.hpp"

namespace semilie {

using PolyMatrix = std::vector<std::vector<QPolynomial>>;

struct DerivMatrix {
  int sum_bc = 1;
  int vda = 0;
  int n = 0;
  int theta = 0;
  PolyMatrix m;  // (n + floor(theta/2) + 2) x (n + 1)

  int rows() const { return static_cast<int>(m.size()); }
  int cols() const { return n + 1; }
};

struct RowReduction {
  PolyMatrix m1;  // M'
  PolyMatrix m2;  // M''
};

struct RankCertificate {
  bool full_rank = false;
  int rank = 0;                  // from fraction-free elimination
  std::vector<int> pivot_rows;   // structural pivot row for each column
  QPolynomial pivot_product;     // product of the structural pivots
  bool zeros_below = false;      // M''_{i,r} = 0 for i >= r + floor(theta/2) + 2
  bool antidiagonal_ok = false;  // pivots match the closed forms
  bool spot_checks_ok = false;   // pivot product nonzero at q = 3, 5, 7
  std::vector<std::string> notes;
};

DerivMatrix build_matrix(int sum_bc, int vda, int n);
RowReduction row_reduce(const DerivMatrix& dm);
// Expected M'' entry at row r + floor(theta/2) + 1, column r.
QPolynomial antidiagonal_closed_form(int sum_bc, int vda, int r);
// Rank over Q(q) by fraction-free elimination.
int bareiss_rank(PolyMatrix a);
RankCertificate certify_full_rank(const DerivMatrix& dm);

struct VanishingReport {
  OrbitalParams params;
  QPolynomial value;
  bool asserted = false;  // false inside an exceptional window
  bool pass = false;
};

HeckeVector large_r_combination(int r);
VanishingReport test_large_r_vanishing(const OrbitalParams& p);

// phi_r = 1_{<=r} + 1_{<=r-1} - q^2 (1_{<=r-2} + 1_{<=r-3})
HeckeVector phi_vector(int r);
// phi_r + (q+1) phi_{r-1} + q phi_{r-2}
HeckeVector phi_sequence_vector(int r);
// Inclusive exceptional window [lo, lo + 2].
int phi_window_start(const OrbitalParams& p);
VanishingReport test_phi_sequence(const OrbitalParams& base, int r);

std::string matrix_to_string(const PolyMatrix& m);

}  // namespace semilie
