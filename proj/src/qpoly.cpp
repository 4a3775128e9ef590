#include "semilie/qpoly.hpp"

#include <stdexcept>
#include <vector>

namespace semilie {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

std::string rational_to_string(const Rational& r) { return r.get_str(); }

QPolynomial::QPolynomial(long c) : QPolynomial(Rational(c)) {}

QPolynomial::QPolynomial(const Rational& c) {
  if (c != 0) terms_[0] = c;
}

QPolynomial QPolynomial::monomial(const Rational& c, int exponent) {
  QPolynomial p;
  p.add_term(exponent, c);
  return p;
}

QPolynomial QPolynomial::geometric(int n) {
  QPolynomial p;
  for (int j = 0; j <= n; ++j) p.terms_[j] = 1;
  return p;
}

Rational QPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QPolynomial::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int QPolynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

int QPolynomial::low_degree() const {
  if (terms_.empty()) throw std::domain_error("low degree of zero polynomial");
  return terms_.begin()->first;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  QPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

QPolynomial QPolynomial::shifted(int k) const {
  QPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

Rational QPolynomial::evaluate(const Rational& q) const {
  if (q == 0) {
    if (!terms_.empty() && terms_.begin()->first < 0) throw std::domain_error("negative power of q at q = 0");
    return coeff(0);
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    Rational base = e >= 0 ? q : Rational(1) / q;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    total += c * power;
  }
  return total;
}

namespace {

std::string q_power(int e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

// Absolute coefficient followed by q power, omitting a unit coefficient.
std::string abs_term(const Rational& c, int e) {
  Rational a = abs(c);
  std::string qp = q_power(e);
  if (qp.empty()) return a.get_str();
  if (a == 1) return qp;
  if (a.get_den() == 1) return a.get_str() + qp;
  return "(" + a.get_str() + ")" + qp;
}

}  // namespace

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool neg = it->second < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += abs_term(it->second, it->first);
    first = false;
  }
  return out;
}

QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  const int bdeg = b.degree();
  const Rational blead = b.coeff(bdeg);
  const int qlow = a.low_degree() - b.low_degree();
  QPolynomial quotient;
  QPolynomial rem = a;
  while (!rem.is_zero()) {
    int shift = rem.degree() - bdeg;
    if (shift < qlow) throw std::domain_error("inexact polynomial division");
    Rational c = rem.coeff(rem.degree()) / blead;
    QPolynomial t = QPolynomial::monomial(c, shift);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

LaurentSeries LaurentSeries::monomial(const QPolynomial& c, int k) {
  LaurentSeries s;
  s.add_term(k, c);
  return s;
}

QPolynomial LaurentSeries::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? QPolynomial() : it->second;
}

void LaurentSeries::add_term(int k, const QPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
  LaurentSeries r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1 + k2, c1 * c2);
  *this = std::move(r);
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const QPolynomial& c) {
  LaurentSeries r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  *this = std::move(r);
  return *this;
}

LaurentSeries LaurentSeries::evaluated(const Rational& q) const {
  LaurentSeries r;
  for (const auto& [k, c] : terms_) r.add_term(k, QPolynomial(c.evaluate(q)));
  return r;
}

namespace {

std::string t_power(int k) {
  if (k == 0) return "";
  if (k == 1) return "T";
  return "T^" + std::to_string(k);
}

}  // namespace

std::string LaurentSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    bool all_neg = true;
    for (const auto& [e, v] : c.terms()) all_neg = all_neg && v < 0;
    QPolynomial mag = all_neg ? -c : c;
    std::string body;
    std::string tp = t_power(k);
    if (tp.empty()) {
      body = mag.to_string();
      if (!first && !mag.is_monomial()) body = "(" + body + ")";
    } else if (mag == QPolynomial(1)) {
      body = tp;
    } else if (mag.is_monomial()) {
      body = mag.to_string() + tp;
    } else {
      body = "(" + mag.to_string() + ")" + tp;
    }
    if (first) {
      out += (all_neg ? "-" : "") + body;
    } else {
      out += (all_neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b) { return a + b; }
QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b) { return a * b; }
LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

QPolynomial series_at_one(const LaurentSeries& s) {
  QPolynomial total;
  for (const auto& [k, c] : s.terms()) total += c;
  return total;
}

QPolynomial series_log_derivative_at_zero(const LaurentSeries& s) {
  QPolynomial total;
  for (const auto& [k, c] : s.terms()) total += c * QPolynomial(static_cast<long>(k));
  return total;
}

}  // namespace semilie
