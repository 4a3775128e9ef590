#include "semilie/orbital.hpp"

#include <algorithm>
#include <sstream>

namespace semilie {

std::string valuation_to_string(int v) { return is_inf(v) ? "inf" : std::to_string(v); }

OrbitalParams OrbitalParams::with_r(int nr) const {
  OrbitalParams p = *this;
  p.r = nr;
  return p;
}

OrbitalParams OrbitalParams::with_ve(int nve) const {
  OrbitalParams p = *this;
  p.ve = nve;
  if (nve < 0) p.vanishing_regime = true;
  return p;
}

std::string OrbitalParams::to_string() const {
  std::ostringstream os;
  os << "(r=" << r << ", vb=" << vb << ", vc=" << vc << ", ve=" << ve << ", vda=" << valuation_to_string(vda) << ")";
  return os.str();
}

namespace {

std::optional<std::string> structural_error(const OrbitalParams& p) {
  if (p.r < 0) return "r must be >= 0";
  if (p.vda < 0) return "vda must be >= 0";
  const int s = p.sum();
  if (s % 2 == 0) return "vb+vc must be odd (got " + std::to_string(s) + ")";
  if (s < 1) return "vb+vc must be >= 1 (got " + std::to_string(s) + ")";
  return std::nullopt;
}

void check(const OrbitalParams& p) {
  if (auto err = structural_error(p)) throw InvalidParams(*err);
}

}  // namespace

std::optional<std::string> validation_error(const OrbitalParams& p) {
  if (auto err = structural_error(p)) return err;
  if (p.ve < 0 && !p.vanishing_regime) return "ve < 0 requires the vanishing-regime flag";
  return std::nullopt;
}

const OrbitalParams& validate(const OrbitalParams& p) {
  if (auto err = validation_error(p)) throw InvalidParams(*err);
  return p;
}

int theta_of(const OrbitalParams& p) { return std::min(p.sum(), 2 * p.vda); }
int kappa_of(const OrbitalParams& p) { return p.ve - (p.vda + p.r); }
int n_of(const OrbitalParams& p) { return std::min({p.ve, (p.sum() - 1) / 2 + p.r, p.vda + p.r}); }

bool orbital_vanishes(const OrbitalParams& p) { return p.ve < 0 || p.sum() < -2 * p.r; }

LaurentSeries orbital_closed_form(const OrbitalParams& p) {
  check(p);
  LaurentSeries out;
  if (orbital_vanishes(p)) return out;
  const int r = p.r, vb = p.vb, vc = p.vc, ve = p.ve, vda = p.vda;
  const int big_n = n_of(p);
  const int hi = 2 * ve + vc + r;
  for (int k = -(vb + r); k <= hi; ++k) {
    int nk = std::min({floor_div(k + vb + r, 2), floor_div(hi - k, 2), big_n});
    out.add_term(k, QPolynomial::geometric(nk) * QPolynomial(sign_pow(k)));
  }
  if (!is_inf(vda) && vda < ve - r && p.sum() > 2 * vda) {
    const int lo2 = 2 * vda - vb + r;
    const int hi2 = 2 * ve + vc - 2 * vda - r;
    for (int k = lo2; k <= hi2; ++k) {
      int ck = std::min({k - lo2, hi2 - k, ve - vda - r});
      out.add_term(k, QPolynomial::monomial(Rational(sign_pow(k) * ck), vda + r));
    }
  }
  return out;
}

LaurentSeries orbital_support_sum(const OrbitalParams& p) {
  check(p);
  LaurentSeries out;
  if (orbital_vanishes(p)) return out;
  const int r = p.r, vc = p.vc, ve = p.ve, s = p.sum();
  const int theta = theta_of(p);
  // (-T)^e contributes sign (-1)^e at T^e.
  auto add = [&](int e, int qexp) { out.add_term(e, QPolynomial::monomial(Rational(sign_pow(e)), qexp)); };
  for (int n2 = 0; n2 <= ve; ++n2)
    for (int m = 0; m <= theta + 2 * r; ++m) add(2 * n2 - m + vc + r, std::min(n2, floor_div(m, 2)));
  if (theta % 2 == 0) {
    const int half = theta / 2;
    for (int n2 = 0; n2 <= ve; ++n2) {
      const int w = std::min(n2, half + r);
      const int hi_plus = std::max(r, n2 - half) + s + r;
      for (int m = theta + 2 * r + 1; m <= hi_plus; ++m) add(2 * n2 - m + vc + r, w);
      const int hi_minus = n2 + half + r;
      for (int m = theta + 2 * r + 1; m <= hi_minus; ++m) add(2 * n2 - m + vc + r, w);
    }
  }
  return out;
}

QPolynomial derivative_closed_form(const OrbitalParams& p) {
  check(p);
  QPolynomial out;
  if (orbital_vanishes(p)) return out;
  const int s = p.sum();
  const int big_n = n_of(p);
  const int lead = (2 * p.ve + s + 1) / 2 + p.r;
  for (int j = 0; j <= big_n; ++j) out.add_term(j, Rational(lead - 2 * j));
  const int kappa = kappa_of(p);
  if (!is_inf(p.vda) && kappa >= 0 && s > 2 * p.vda) {
    Rational corr;
    if (kappa % 2 == 0) {
      corr = frac(kappa, 2);
    } else {
      corr = Rational(p.ve) + frac(s, 2) - 2 * p.vda - p.r - frac(kappa, 2);
    }
    out.add_term(p.vda + p.r, -corr);
  }
  return out;
}

QPolynomial derivative_combo(const OrbitalParams& p) {
  check(p);
  if (p.r < 1) throw InvalidParams("combination requires r >= 1");
  if (orbital_vanishes(p)) return {};
  const int s = p.sum();
  const int big_n = n_of(p);
  const int kappa = kappa_of(p);
  const bool small_vda = !is_inf(p.vda) && s > 2 * p.vda;
  long c = 0;
  if (small_vda && kappa > 0 && kappa % 2 == 1) {
    c = (kappa - 1) / 2;
  } else if (small_vda && kappa >= 0 && kappa % 2 == 0) {
    c = (kappa + s - 2 * p.vda - 1) / 2;
  } else if (p.ve >= (s - 1) / 2 + p.r && 2 * static_cast<long>(p.vda) > s) {
    c = p.ve - big_n;
  }
  long c_prime = (small_vda && kappa >= 0) ? c + 1 : 0;
  QPolynomial out = QPolynomial::geometric(big_n);
  out.add_term(big_n, Rational(c));
  out.add_term(big_n - 1, Rational(c_prime));
  return out;
}

HeckeVector::HeckeVector(std::initializer_list<std::pair<const int, QPolynomial>> init) {
  for (const auto& [r, c] : init) add(r, c);
}

void HeckeVector::add(int r, const QPolynomial& c) {
  if (r < 0 || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeVector& HeckeVector::operator+=(const HeckeVector& o) {
  for (const auto& [r, c] : o.coeffs_) add(r, c);
  return *this;
}

HeckeVector& HeckeVector::operator*=(const QPolynomial& c) {
  HeckeVector out;
  for (const auto& [r, v] : coeffs_) out.add(r, v * c);
  *this = std::move(out);
  return *this;
}

QPolynomial derivative_of_vector(const OrbitalParams& base, const HeckeVector& v) {
  QPolynomial out;
  for (const auto& [r, c] : v.coeffs()) {
    OrbitalParams p = base.with_r(r);
    out += c * derivative_closed_form(p) * QPolynomial(sign_pow(p.vc + r));
  }
  return out;
}

int transfer_factor(const OrbitalParams& p) { return sign_pow(p.vc + 1); }

}  // namespace semilie
