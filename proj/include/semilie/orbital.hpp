#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "semilie/qpoly.hpp"

namespace semilie {

// Stand-in for an unbounded v(d-a). Large enough to dominate every finite
// comparison, small enough that 2*kInf + small terms stays in int range.
inline constexpr int kInf = 1 << 28;
inline bool is_inf(int v) { return v >= kInf; }
std::string valuation_to_string(int v);

struct OrbitalParams {
  int r = 0;
  int vb = 0;
  int vc = 1;
  int ve = 0;
  int vda = 0;
  bool vanishing_regime = false;

  int sum() const { return vb + vc; }
  OrbitalParams with_r(int nr) const;
  OrbitalParams with_ve(int nve) const;
  std::string to_string() const;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::optional<std::string> validation_error(const OrbitalParams& p);
// Throws InvalidParams naming the violated invariant.
const OrbitalParams& validate(const OrbitalParams& p);

// theta = min(vb+vc, 2 vda), kappa = ve - (vda + r), N = min(ve, (vb+vc-1)/2 + r, vda + r)
int theta_of(const OrbitalParams& p);
int kappa_of(const OrbitalParams& p);
int n_of(const OrbitalParams& p);

bool orbital_vanishes(const OrbitalParams& p);

LaurentSeries orbital_closed_form(const OrbitalParams& p);
LaurentSeries orbital_support_sum(const OrbitalParams& p);

// (-1)^{vc+r} / log q times the derivative at s = 0.
QPolynomial derivative_closed_form(const OrbitalParams& p);
// Same normalization for 1_{<=r} + 1_{<=r-1}; r >= 1.
QPolynomial derivative_combo(const OrbitalParams& p);

/// Combination sum_r c_r 1_{K'_{S,<=r}} with coefficients in Q[q^{+-1}].
class HeckeVector {
 public:
  HeckeVector() = default;
  HeckeVector(std::initializer_list<std::pair<const int, QPolynomial>> init);

  const std::map<int, QPolynomial>& coeffs() const { return coeffs_; }
  // Entries with negative index are the zero function and are dropped.
  void add(int r, const QPolynomial& c);
  HeckeVector& operator+=(const HeckeVector& o);
  HeckeVector& operator*=(const QPolynomial& c);
  friend HeckeVector operator+(HeckeVector a, const HeckeVector& b) { return a += b; }
  friend HeckeVector operator*(const QPolynomial& c, HeckeVector a) { return a *= c; }
  friend bool operator==(const HeckeVector& a, const HeckeVector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::map<int, QPolynomial> coeffs_;
};

// (1 / log q) times the derivative of the orbital integral of sum c_r 1_{<=r}.
// The r field of base is ignored.
QPolynomial derivative_of_vector(const OrbitalParams& base, const HeckeVector& v);

int transfer_factor(const OrbitalParams& p);

}  // namespace semilie
