#pragma once

#include <cctype>
#include <random>
#include <stdexcept>
#include <string>

#include "semilie/qpoly.hpp"

namespace testing_support {

using semilie::LaurentSeries;
using semilie::QPolynomial;
using semilie::Rational;

// Parses strings such as "2q^3 + q^{2} - 7q + 1" or "q^7 + ... + 1".
// A "..." term fills every exponent strictly between its neighbours with coefficient +-1.
inline QPolynomial poly(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '{' && c != '}') s += c;
  QPolynomial out;
  size_t i = 0;
  bool pending_dots = false;
  int dots_sign = 1;
  int last_exp = 0;
  bool have_last = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    if (s.compare(i, 3, "...") == 0) {
      pending_dots = true;
      dots_sign = sign;
      i += 3;
      continue;
    }
    long num = 1;
    long den = 1;
    bool has_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t used = 0;
      num = std::stol(s.substr(i), &used);
      i += used;
      has_num = true;
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = std::stol(s.substr(i), &used);
        i += used;
      }
    }
    int exp = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t used = 0;
        exp = std::stoi(s.substr(i), &used);
        i += used;
      }
    } else if (!has_num) {
      throw std::invalid_argument("bad polynomial literal: " + text);
    }
    if (pending_dots) {
      if (!have_last) throw std::invalid_argument("leading ... in " + text);
      for (int e = std::min(last_exp, exp) + 1; e < std::max(last_exp, exp); ++e) out.add_term(e, dots_sign);
      pending_dots = false;
    }
    out.add_term(exp, semilie::frac(sign * num, den));
    last_exp = exp;
    have_last = true;
  }
  return out;
}

inline QPolynomial random_poly(std::mt19937& rng, int lo = -3, int hi = 4, int terms = 4) {
  std::uniform_int_distribution<int> e(lo, hi);
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> d(1, 4);
  QPolynomial out;
  for (int t = 0; t < terms; ++t) out.add_term(e(rng), semilie::frac(c(rng), d(rng)));
  return out;
}

inline LaurentSeries random_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> k(-3, 3);
  LaurentSeries out;
  for (int t = 0; t < 3; ++t) out.add_term(k(rng), random_poly(rng, -1, 2, 2));
  return out;
}

}  // namespace testing_support
