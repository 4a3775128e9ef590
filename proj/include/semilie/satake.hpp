#pragma once

#include <map>
#include <string>
#include <vector>

#include "semilie/qpoly.hpp"

namespace semilie {

/// Symmetric Laurent polynomial in X_1..X_n stored as orbit sums of monomials,
/// keyed by the exponent vector sorted in decreasing order.
class SatakeGL {
 public:
  explicit SatakeGL(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<std::vector<int>, QPolynomial>& terms() const { return terms_; }
  void add_orbit(std::vector<int> exponents, const QPolynomial& c);

  SatakeGL& operator+=(const SatakeGL& o);
  SatakeGL& operator*=(const QPolynomial& c);
  friend SatakeGL operator+(SatakeGL a, const SatakeGL& b) { return a += b; }
  friend SatakeGL operator*(const QPolynomial& c, SatakeGL a) { return a *= c; }
  friend bool operator==(const SatakeGL& a, const SatakeGL& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int n_;
  std::map<std::vector<int>, QPolynomial> terms_;
};

/// W_1-invariant Laurent polynomial in Y; entry i holds the coefficient of Y^i + Y^-i
/// (of 1 when i = 0).
class SatakeY {
 public:
  SatakeY() = default;
  static SatakeY from_exponents(const std::map<int, QPolynomial>& by_exponent);
  // sum_{j=-r}^{r} Y^j
  static SatakeY window(int r);

  const std::map<int, QPolynomial>& terms() const { return terms_; }
  QPolynomial coeff(int i) const;
  void add(int i, const QPolynomial& c);
  bool is_zero() const { return terms_.empty(); }

  SatakeY operator-() const;
  SatakeY& operator+=(const SatakeY& o);
  SatakeY& operator-=(const SatakeY& o);
  SatakeY& operator*=(const QPolynomial& c);
  friend SatakeY operator+(SatakeY a, const SatakeY& b) { return a += b; }
  friend SatakeY operator-(SatakeY a, const SatakeY& b) { return a -= b; }
  friend SatakeY operator*(const QPolynomial& c, SatakeY a) { return a *= c; }
  friend bool operator==(const SatakeY& a, const SatakeY& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<int, QPolynomial> terms_;
};

class PalindromeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// q^{(n-1) r} times the complete homogeneous symmetric polynomial of degree r.
SatakeGL satake_gl_det(int n, int r);
SatakeY satake_u3_indicator(int r);
// X^(a,b,c) -> Y^(a-c), summed over each orbit.
SatakeY bc_gl3_to_u3(const SatakeGL& x);
// q^{2r} (Y^r + Y^{r-2} + ... + Y^{-r})
SatakeY bc_gl3_det_difference_target(int r);

// Coefficients c_j of 1_{K'_{S,j}}, j = 0..r, in the fiber integral of f'_r.
std::map<int, QPolynomial> proj_fiber_gl3(int r);
// 1 + 2q + ... + 2q^m
QPolynomial odd_weight(int m);

// Images of 1_{K'_{S,j}}, j = 0..bound, solved against the U(3) indicators.
std::vector<SatakeY> bc_s3_basis_table(int bound);
SatakeY bc_s3_on_basis(int j, int bound);
// Image of sum_j (1 + 2q + ... + 2q^{r-j}) 1_{K'_{S,j}} under a given basis table.
SatakeY bc_s3_aggregate(const std::vector<SatakeY>& table, int r);

// Image of 1_{<=r} + 1_{<=r-1} for n = 2.
SatakeY bc_s2_combo(int r);
// Image of 1_{<=r} alone, by triangular solve.
SatakeY bc_s2_on_basis(int r);
SatakeY p_r_polynomial(int r);

}  // namespace semilie
