#pragma once

#include <string>

#include "semilie/orbital.hpp"

namespace semilie {

struct GKPair {
  int n1 = 0;
  int n2 = 0;
  bool empty() const { return n1 < 0; }
};

struct GeometricParams {
  int v_nm_u = 0;
  int v_beta = 0;
  int v_alpha_diff = 0;  // kInf allowed
};

// The orbital valuations determined by geometric data; r, vb and vc individually are free.
struct OrbitalValuations {
  int sum_bc = 1;
  int ve = 0;
  int vda = 0;
};

QPolynomial gross_keating(const GKPair& g);
GKPair gk_from_params(const OrbitalParams& p);

QPolynomial int_circ(const OrbitalParams& p);
QPolynomial int_total(const OrbitalParams& p);
// Int° against 1_{K,r} = 1_{K,<=r} - 1_{K,<=r-1}; r >= 1, ve >= 1.
QPolynomial int_circ_kr_closed(const OrbitalParams& p);

OrbitalValuations geom_to_orbital(const GeometricParams& g);
// N = min(v(Nm u), v(beta) + r, v(alpha - alpha bar) + r).
int geometric_n(const GeometricParams& g, int r);

struct IdentityReport {
  OrbitalParams params;
  QPolynomial lhs;
  QPolynomial rhs;
  bool pass = false;
};

// GK(ve) == D(ve) + D(ve - 1).
IdentityReport verify_miracle(const OrbitalParams& p);
// (-1)^r [Int(r) - Int(r-1)] == -omega * (1/log q) dOrb(1_{<=r} + 1_{<=r-1}); r >= 1.
IdentityReport verify_afl(const OrbitalParams& p);
// Int(r) == D(r).
IdentityReport verify_int_total(const OrbitalParams& p);
// int_circ_kr_closed == int_circ(r) - int_circ(r-1).
IdentityReport verify_clean_intersection(const OrbitalParams& p);

}  // namespace semilie
