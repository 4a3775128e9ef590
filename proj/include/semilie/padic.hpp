#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semilie/qpoly.hpp"

namespace semilie {

class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadElt {
  int64_t a = 0;  // a + b sqrt(eps)
  int64_t b = 0;
  friend bool operator==(const QuadElt&, const QuadElt&) = default;
};

// Valuation truncated at the working precision; value == precision means "at least precision".
struct TruncVal {
  int v = 0;
  bool at_least = false;
  std::string to_string() const;
};

/// O_E / p^k for E = Q_p(sqrt(eps)) unramified.
class TruncQuadExt {
 public:
  TruncQuadExt(int64_t p, int precision);

  int64_t p() const { return p_; }
  int precision() const { return precision_; }
  int64_t modulus() const { return mod_; }
  int64_t eps() const { return eps_; }

  int64_t reduce(int64_t x) const;
  QuadElt make(int64_t a, int64_t b) const { return {reduce(a), reduce(b)}; }
  QuadElt add(QuadElt x, QuadElt y) const;
  QuadElt sub(QuadElt x, QuadElt y) const;
  QuadElt neg(QuadElt x) const;
  QuadElt mul(QuadElt x, QuadElt y) const;
  QuadElt scale(QuadElt x, int64_t c) const;
  QuadElt conj(QuadElt x) const;
  int64_t norm(QuadElt x) const;
  bool is_unit(QuadElt x) const;
  QuadElt inverse(QuadElt x) const;  // requires a unit

  TruncVal valuation_int(int64_t x) const;
  TruncVal valuation(QuadElt x) const;
  // Exact valuation; throws InsufficientPrecision when it is not determined.
  int exact_valuation(QuadElt x) const;
  // True when v(x) >= k; k <= precision.
  bool valuation_at_least(QuadElt x, int k) const;

  int64_t power_of_p(int k) const;
  // Enumeration index in [0, p^{2 precision}).
  QuadElt element(int64_t index) const;
  int64_t size() const { return mod_ * mod_; }

 private:
  int64_t p_;
  int precision_;
  int64_t mod_;
  int64_t eps_;
};

int64_t smallest_nonresidue(int64_t p);

/// x + y Pi in the quaternion division algebra, Pi^2 = p, Pi t = conj(t) Pi.
struct TruncQuaternion {
  QuadElt x;
  QuadElt y;
  friend bool operator==(const TruncQuaternion&, const TruncQuaternion&) = default;
};

TruncQuaternion quat_mul(const TruncQuadExt& E, const TruncQuaternion& u, const TruncQuaternion& v);
TruncQuaternion quat_conj(const TruncQuadExt& E, const TruncQuaternion& u);
int64_t quat_norm(const TruncQuadExt& E, const TruncQuaternion& u);
// E-component of u * conj(v).
QuadElt hermitian_form(const TruncQuadExt& E, const TruncQuaternion& u, const TruncQuaternion& v);

// Volume lemmas, with Vol(O_E) = 1 and q = p.
Rational one_disk_formula(const TruncQuadExt& E, QuadElt xi, int rho, int n);
Rational two_disk_formula(const TruncQuadExt& E, QuadElt xi1, QuadElt xi2, int rho1, int rho2, int n);
Rational count_one_disk(const TruncQuadExt& E, QuadElt xi, int rho, int n);
Rational count_two_disk(const TruncQuadExt& E, QuadElt xi1, QuadElt xi2, int rho1, int rho2, int n);

struct VolumeSweep {
  long one_disk_checked = 0;
  long two_disk_checked = 0;
  long two_disk_positive = 0;
  std::vector<std::string> mismatches;  // first few only
  long mismatch_count = 0;
};

// Every unit centre, every rho in [-1, precision-1] and every admissible n: the enumerated
// volumes against both lemmas. Second centres range over unit classes mod p^{rho2}.
VolumeSweep sweep_volume_lemmas(const TruncQuadExt& E);

struct QuaternionInvariants {
  QuadElt trace;
  QuadElt det;
  QuadElt self_pairing;  // <u,u>
  QuadElt g_pairing;     // <g(u),u>
};

struct InvariantCheck {
  QuaternionInvariants computed;
  QuaternionInvariants closed_form;
  bool matrix_matches_quaternion = false;  // g(u) via 2x2 matrix == lambda^{-1} u (alpha + beta Pi)
  bool pass = false;
};

class InadmissibleTuple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// u = s + t Pi with s t = 0.
InvariantCheck quaternion_invariants(const TruncQuadExt& E, QuadElt lambda, QuadElt alpha, QuadElt beta,
                                     const TruncQuaternion& u);

}  // namespace semilie
