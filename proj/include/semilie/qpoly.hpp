#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace semilie {

using Rational = mpq_class;

// a/b in lowest terms.
inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/// Laurent polynomial in q with exact rational coefficients.
class QPolynomial {
 public:
  using Terms = std::map<int, Rational>;

  QPolynomial() = default;
  QPolynomial(long c);  // NOLINT(google-explicit-constructor)
  QPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)

  static QPolynomial monomial(const Rational& c, int exponent);
  // 1 + q + ... + q^n; zero when n < 0.
  static QPolynomial geometric(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  void add_term(int exponent, const Rational& c);

  int degree() const;      // requires nonzero
  int low_degree() const;  // requires nonzero
  bool is_monomial() const { return terms_.size() == 1; }

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

  // Multiply by q^k.
  QPolynomial shifted(int k) const;
  Rational evaluate(const Rational& q) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

// Exact division; throws std::domain_error when b does not divide a.
QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b);

/// Finitely supported series in T = q^s with QPolynomial coefficients.
class LaurentSeries {
 public:
  using Terms = std::map<int, QPolynomial>;

  LaurentSeries() = default;
  static LaurentSeries monomial(const QPolynomial& c, int k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QPolynomial coeff(int k) const;
  void add_term(int k, const QPolynomial& c);

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);
  LaurentSeries& operator*=(const QPolynomial& c);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
  friend LaurentSeries operator*(LaurentSeries a, const QPolynomial& c) { return a *= c; }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) { return a.terms_ == b.terms_; }

  // Coefficients evaluated at a numeric q.
  LaurentSeries evaluated(const Rational& q) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b);
LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

// Value at T = 1.
QPolynomial series_at_one(const LaurentSeries& s);
// d/ds at s = 0 divided by log q, i.e. sum of k * coeff_k.
QPolynomial series_log_derivative_at_zero(const LaurentSeries& s);

// Floor and ceiling division for possibly negative operands.
int floor_div(int a, int b);
int ceil_div(int a, int b);
inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

std::string rational_to_string(const Rational& r);

}  // namespace semilie
