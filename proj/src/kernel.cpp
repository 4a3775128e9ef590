#include "semilie/kernel.hpp"

#include <algorithm>
#include <sstream>

namespace semilie {

DerivMatrix build_matrix(int sum_bc, int vda, int n) {
  if (sum_bc < 1 || sum_bc % 2 == 0) throw InvalidParams("sum_bc must be odd and >= 1");
  if (vda < 0) throw InvalidParams("vda must be >= 0");
  if (n < 0) throw InvalidParams("N must be >= 0");
  DerivMatrix dm;
  dm.sum_bc = sum_bc;
  dm.vda = vda;
  dm.n = n;
  dm.theta = std::min(sum_bc, 2 * vda);
  const int rows = n + dm.theta / 2 + 2;
  dm.m.assign(rows, std::vector<QPolynomial>(n + 1));
  for (int i = 0; i < rows; ++i)
    for (int r = 0; r <= n; ++r) dm.m[i][r] = derivative_closed_form({r, 0, sum_bc, i, vda, false});
  return dm;
}

RowReduction row_reduce(const DerivMatrix& dm) {
  RowReduction out{dm.m, {}};
  const int rows = dm.rows();
  for (int i = rows - 1; i >= 1; --i)
    for (int r = 0; r < dm.cols(); ++r) out.m1[i][r] -= dm.m[i - 1][r];
  out.m2 = out.m1;
  for (int i = rows - 1; i >= 2; --i)
    for (int r = 0; r < dm.cols(); ++r) out.m2[i][r] -= out.m1[i - 2][r];
  return out;
}

QPolynomial antidiagonal_closed_form(int sum_bc, int vda, int r) {
  const int theta = std::min(sum_bc, 2 * vda);
  const int h = theta / 2;
  QPolynomial out;
  if (theta % 2 == 1) {
    out.add_term(r + h, 1);
    if (!(r == 0 && theta <= 1)) out.add_term(r + h - 1, -1);
  } else {
    out.add_term(r + vda, frac(-(sum_bc - 1 - 2 * vda), 2));
    if (!(r == 0 && theta <= 1)) out.add_term(r + vda - 1, frac(-(sum_bc + 1 - 2 * vda), 2));
  }
  return out;
}

int bareiss_rank(PolyMatrix a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  QPolynomial prev(1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = divide_exact(a[rank][c] * a[i][j] - a[i][c] * a[rank][j], prev);
      a[i][c] = QPolynomial();
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

RankCertificate certify_full_rank(const DerivMatrix& dm) {
  RankCertificate cert;
  const RowReduction red = row_reduce(dm);
  const int h = dm.theta / 2;
  cert.rank = bareiss_rank(dm.m);

  cert.zeros_below = true;
  for (int r = 0; r < dm.cols(); ++r)
    for (int i = r + h + 2; i < dm.rows(); ++i)
      if (!red.m2[i][r].is_zero()) {
        cert.zeros_below = false;
        cert.notes.push_back("nonzero M'' entry below the anti-diagonal at (" + std::to_string(i) + "," +
                             std::to_string(r) + ")");
      }

  cert.antidiagonal_ok = true;
  cert.pivot_product = QPolynomial(1);
  for (int r = 0; r < dm.cols(); ++r) {
    int row = r + h + 1;
    QPolynomial entry = red.m2[row][r];
    if (!(entry == antidiagonal_closed_form(dm.sum_bc, dm.vda, r))) {
      cert.antidiagonal_ok = false;
      cert.notes.push_back("anti-diagonal entry at column " + std::to_string(r) + " is " + entry.to_string());
    }
    if (entry.is_zero() && r == 0) {
      row = 0;
      entry = red.m2[0][0];
      cert.notes.push_back("column 0 pivot taken from row 0");
    }
    if (entry.is_zero()) cert.notes.push_back("vanishing pivot at column " + std::to_string(r));
    cert.pivot_rows.push_back(row);
    cert.pivot_product *= entry;
  }

  cert.spot_checks_ok = true;
  for (int q : {3, 5, 7})
    if (cert.pivot_product.evaluate(q) == 0) cert.spot_checks_ok = false;

  cert.full_rank = cert.rank == dm.cols() && cert.zeros_below && cert.antidiagonal_ok && cert.spot_checks_ok &&
                   !cert.pivot_product.is_zero();
  return cert;
}

HeckeVector large_r_combination(int r) {
  return HeckeVector{{r, QPolynomial(1)}, {r - 1, QPolynomial(2)}, {r - 2, QPolynomial(1)}};
}

VanishingReport test_large_r_vanishing(const OrbitalParams& p) {
  VanishingReport rep{p, derivative_of_vector(p, large_r_combination(p.r)), p.r >= p.ve + 2, false};
  rep.pass = !rep.asserted || rep.value.is_zero();
  return rep;
}

HeckeVector phi_vector(int r) {
  const QPolynomial q2 = QPolynomial::monomial(-1, 2);
  return HeckeVector{{r, QPolynomial(1)}, {r - 1, QPolynomial(1)}, {r - 2, q2}, {r - 3, q2}};
}

HeckeVector phi_sequence_vector(int r) {
  HeckeVector out = phi_vector(r);
  out += QPolynomial::geometric(1) * phi_vector(r - 1);
  out += QPolynomial::monomial(1, 1) * phi_vector(r - 2);
  return out;
}

int phi_window_start(const OrbitalParams& p) { return p.ve - std::min((p.sum() - 1) / 2, p.vda) + 2; }

VanishingReport test_phi_sequence(const OrbitalParams& base, int r) {
  if (r < 5) throw InvalidParams("phi sequence needs r >= 5");
  const int lo = phi_window_start(base);
  VanishingReport rep{base.with_r(r), derivative_of_vector(base, phi_sequence_vector(r)), r < lo || r > lo + 2,
                      false};
  rep.pass = !rep.asserted || rep.value.is_zero();
  return rep;
}

std::string matrix_to_string(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  std::vector<size_t> width;
  for (const auto& row : m) {
    cells.emplace_back();
    for (size_t j = 0; j < row.size(); ++j) {
      cells.back().push_back(row[j].to_string());
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], cells.back().back().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << " | ";
      os << row[j] << std::string(width[j] - row[j].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace semilie
