#include "semilie/intersection.hpp"

#include <algorithm>

namespace semilie {

QPolynomial gross_keating(const GKPair& g) {
  QPolynomial out;
  if (g.empty()) return out;
  if (g.n2 < g.n1) throw std::invalid_argument("Gross-Keating invariants need n1 <= n2");
  const int n1 = g.n1, n2 = g.n2;
  if (n1 % 2 == 1) {
    for (int j = 0; j <= (n1 - 1) / 2; ++j) out.add_term(j, Rational(n1 + n2 - 4 * j));
  } else {
    out.add_term(n1 / 2, frac(n2 - n1 + 1, 2));
    for (int j = 0; j <= n1 / 2 - 1; ++j) out.add_term(j, Rational(n1 + n2 - 4 * j));
  }
  return out;
}

GKPair gk_from_params(const OrbitalParams& p) {
  if (p.ve < 0) return {-1, -1};
  const int total = 2 * p.ve + p.sum() + 2 * p.r;
  const int n1 = std::min({2 * p.ve, p.sum() + 2 * p.r, 2 * p.vda + 2 * p.r});
  return {n1, total - n1};
}

namespace {

void require_ve(const OrbitalParams& p) {
  validate(p);
  if (p.ve < 0) throw InvalidParams("intersection numbers need ve >= 0");
}

QPolynomial int_circ_unchecked(const OrbitalParams& p) {
  return gross_keating(gk_from_params(p)) - gross_keating(gk_from_params(p.with_ve(p.ve - 1)));
}

}  // namespace

QPolynomial int_circ(const OrbitalParams& p) {
  require_ve(p);
  return int_circ_unchecked(p);
}

QPolynomial int_total(const OrbitalParams& p) {
  require_ve(p);
  QPolynomial out;
  for (int e = p.ve; e >= 0; e -= 2) out += int_circ_unchecked(p.with_ve(e));
  return out;
}

QPolynomial int_circ_kr_closed(const OrbitalParams& p) {
  validate(p);
  if (p.r < 1) throw InvalidParams("closed formula needs r >= 1");
  if (p.ve < 1) throw InvalidParams("closed formula needs ve >= 1");
  const int big_n = n_of(p);
  const int half = (p.sum() - 1) / 2;
  QPolynomial out;
  if (!is_inf(p.vda) && p.ve - p.r == p.vda && p.vda <= half) {
    const int c = (p.sum() - 2 * p.vda - 1) / 2;
    out.add_term(big_n, Rational(c + 1));
    out.add_term(big_n - 1, Rational(c + 2));
  } else if (half + p.r < std::min(p.ve, p.vda + p.r)) {
    out.add_term(big_n, Rational(2));
  } else {
    out.add_term(big_n, Rational(1));
    out.add_term(big_n - 1, Rational(1));
  }
  return out;
}

OrbitalValuations geom_to_orbital(const GeometricParams& g) {
  return {2 * g.v_beta + 1, g.v_nm_u, g.v_alpha_diff};
}

int geometric_n(const GeometricParams& g, int r) {
  return std::min({g.v_nm_u, g.v_beta + r, is_inf(g.v_alpha_diff) ? kInf : g.v_alpha_diff + r});
}

IdentityReport verify_miracle(const OrbitalParams& p) {
  IdentityReport rep{p, {}, {}, false};
  rep.lhs = gross_keating(gk_from_params(p));
  rep.rhs = derivative_closed_form(p) + derivative_closed_form(p.with_ve(p.ve - 1));
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

IdentityReport verify_afl(const OrbitalParams& p) {
  IdentityReport rep{p, {}, {}, false};
  rep.lhs = (int_total(p) - int_total(p.with_r(p.r - 1))) * QPolynomial(sign_pow(p.r));
  HeckeVector combo{{p.r, QPolynomial(1)}, {p.r - 1, QPolynomial(1)}};
  rep.rhs = QPolynomial(-transfer_factor(p)) * derivative_of_vector(p, combo);
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

IdentityReport verify_int_total(const OrbitalParams& p) {
  IdentityReport rep{p, int_total(p), derivative_closed_form(p), false};
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

IdentityReport verify_clean_intersection(const OrbitalParams& p) {
  IdentityReport rep{p, int_circ_kr_closed(p), int_circ(p) - int_circ(p.with_r(p.r - 1)), false};
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace semilie
