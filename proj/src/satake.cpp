#include "semilie/satake.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace semilie {

void SatakeGL::add_orbit(std::vector<int> exponents, const QPolynomial& c) {
  if (static_cast<int>(exponents.size()) != n_) throw std::invalid_argument("exponent vector has wrong length");
  if (c.is_zero()) return;
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SatakeGL& SatakeGL::operator+=(const SatakeGL& o) {
  if (o.n_ != n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [e, c] : o.terms_) add_orbit(e, c);
  return *this;
}

SatakeGL& SatakeGL::operator*=(const QPolynomial& c) {
  SatakeGL out(n_);
  for (const auto& [e, v] : terms_) out.add_orbit(e, v * c);
  *this = std::move(out);
  return *this;
}

std::string SatakeGL::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out += " + ";
    first = false;
    std::string e;
    for (size_t i = 0; i < it->first.size(); ++i) e += (i ? "," : "") + std::to_string(it->first[i]);
    out += "(" + it->second.to_string() + ")m[" + e + "]";
  }
  return out;
}

SatakeY SatakeY::from_exponents(const std::map<int, QPolynomial>& by_exponent) {
  SatakeY out;
  for (const auto& [j, c] : by_exponent) {
    auto mirror = by_exponent.find(-j);
    if (mirror == by_exponent.end() || !(mirror->second == c))
      throw PalindromeError("Laurent polynomial in Y is not palindromic at exponent " + std::to_string(j));
    if (j >= 0) out.add(j, c);
  }
  return out;
}

SatakeY SatakeY::window(int r) {
  SatakeY out;
  for (int i = 0; i <= r; ++i) out.add(i, QPolynomial(1));
  return out;
}

QPolynomial SatakeY::coeff(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? QPolynomial() : it->second;
}

void SatakeY::add(int i, const QPolynomial& c) {
  if (i < 0) throw std::invalid_argument("SatakeY index must be >= 0");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SatakeY SatakeY::operator-() const {
  SatakeY out = *this;
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

SatakeY& SatakeY::operator+=(const SatakeY& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

SatakeY& SatakeY::operator-=(const SatakeY& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

SatakeY& SatakeY::operator*=(const QPolynomial& c) {
  SatakeY out;
  for (const auto& [i, v] : terms_) out.add(i, v * c);
  *this = std::move(out);
  return *this;
}

std::string SatakeY::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int i = it->first;
    const QPolynomial& c = it->second;
    bool all_neg = true;
    for (const auto& [e, v] : c.terms()) all_neg = all_neg && v < 0;
    QPolynomial mag = all_neg ? -c : c;
    std::string body;
    if (i == 0) {
      body = mag.to_string();
      if (!mag.is_monomial()) body = "(" + body + ")";
    } else {
      std::string y = i == 1 ? "(Y+Y^-1)" : "(Y^" + std::to_string(i) + "+Y^-" + std::to_string(i) + ")";
      if (mag == QPolynomial(1)) {
        body = y;
      } else if (mag.is_monomial()) {
        body = mag.to_string() + y;
      } else {
        body = "(" + mag.to_string() + ")" + y;
      }
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

namespace {

void partitions(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 0; --part) {
    cur.push_back(part);
    partitions(remaining - part, part, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SatakeGL satake_gl_det(int n, int r) {
  if (n != 2 && n != 3) throw std::invalid_argument("satake_gl_det supports n = 2 or 3");
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  SatakeGL out(n);
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(r, r, n, cur, parts);
  const QPolynomial scale = QPolynomial::monomial(1, (n - 1) * r);
  for (const auto& e : parts) out.add_orbit(e, scale);
  return out;
}

SatakeY satake_u3_indicator(int r) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  SatakeY out;
  for (int i = 0; i <= r; ++i) out.add(i, QPolynomial::monomial(1, 2 * floor_div(r + i, 2) - i + r));
  return out;
}

SatakeY bc_gl3_to_u3(const SatakeGL& x) {
  if (x.n() != 3) throw std::invalid_argument("bc_gl3_to_u3 needs n = 3");
  std::map<int, QPolynomial> by_exponent;
  for (const auto& [orbit, c] : x.terms()) {
    std::vector<int> perm = orbit;
    std::sort(perm.begin(), perm.end());
    do {
      by_exponent[perm[0] - perm[2]] += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::erase_if(by_exponent, [](const auto& kv) { return kv.second.is_zero(); });
  return SatakeY::from_exponents(by_exponent);
}

SatakeY bc_gl3_det_difference_target(int r) {
  SatakeY out;
  for (int i = r % 2; i <= r; i += 2) out.add(i, QPolynomial::monomial(1, 2 * r));
  return out;
}

std::map<int, QPolynomial> proj_fiber_gl3(int r) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  std::map<int, QPolynomial> out;
  for (int j = 0; j <= r; ++j) {
    const int top = 2 * (r - j);
    QPolynomial c;
    for (int i = 0; i <= top; ++i)
      c.add_term(i, Rational(std::min(1 + floor_div(i, 2), 1 + floor_div(top - i, 2))));
    out[j] = c;
  }
  return out;
}

QPolynomial odd_weight(int m) {
  QPolynomial out(1);
  for (int i = 1; i <= m; ++i) out.add_term(i, 2);
  return out;
}

std::vector<SatakeY> bc_s3_basis_table(int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  // Row r: sum_{j<=r} odd_weight(r-j) X_j = U3(r); diagonal weight is 1.
  std::vector<SatakeY> table;
  for (int r = 0; r <= bound; ++r) {
    SatakeY rhs = satake_u3_indicator(r);
    for (int j = 0; j < r; ++j) rhs -= odd_weight(r - j) * table[j];
    if (!(odd_weight(0) == QPolynomial(1))) throw std::logic_error("non-unit diagonal");
    table.push_back(rhs);
  }
  return table;
}

SatakeY bc_s3_on_basis(int j, int bound) {
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  if (bound < j) throw std::invalid_argument("bound must be >= j");
  return bc_s3_basis_table(bound)[j];
}

SatakeY bc_s3_aggregate(const std::vector<SatakeY>& table, int r) {
  SatakeY out;
  for (int j = 0; j <= r; ++j) out += odd_weight(r - j) * table.at(j);
  return out;
}

SatakeY bc_s2_combo(int r) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  SatakeY out = QPolynomial::monomial(1, r) * SatakeY::window(r);
  if (r >= 1) out -= QPolynomial::monomial(1, r - 1) * SatakeY::window(r - 1);
  return QPolynomial(sign_pow(r)) * out;
}

SatakeY bc_s2_on_basis(int r) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  SatakeY prev;
  SatakeY cur;
  for (int k = 0; k <= r; ++k) {
    cur = bc_s2_combo(k) - prev;
    prev = cur;
  }
  return cur;
}

SatakeY p_r_polynomial(int r) {
  SatakeY out;
  if (r >= 0) out += QPolynomial::monomial(1, r) * SatakeY::window(r);
  if (r >= 1) out -= QPolynomial::monomial(2, r - 1) * SatakeY::window(r - 1);
  if (r >= 2) out += QPolynomial::monomial(1, r - 2) * SatakeY::window(r - 2);
  return out;
}

}  // namespace semilie
