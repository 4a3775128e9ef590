#include "semilie/padic.hpp"

#include <algorithm>
#include <tuple>

namespace semilie {

std::string TruncVal::to_string() const {
  return at_least ? ">=" + std::to_string(v) : std::to_string(v);
}

int64_t smallest_nonresidue(int64_t p) {
  for (int64_t e = 2; e < p; ++e) {
    bool square = false;
    for (int64_t x = 1; x < p && !square; ++x) square = (x * x) % p == e;
    if (!square) return e;
  }
  throw std::invalid_argument("no quadratic non-residue modulo " + std::to_string(p));
}

TruncQuadExt::TruncQuadExt(int64_t p, int precision) : p_(p), precision_(precision), mod_(1) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  for (int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("p must be an odd prime");
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  for (int i = 0; i < precision; ++i) {
    mod_ *= p;
    if (mod_ > (int64_t{1} << 20)) throw std::invalid_argument("p^precision too large for enumeration");
  }
  eps_ = smallest_nonresidue(p);
}

int64_t TruncQuadExt::reduce(int64_t x) const {
  x %= mod_;
  return x < 0 ? x + mod_ : x;
}

QuadElt TruncQuadExt::add(QuadElt x, QuadElt y) const { return {reduce(x.a + y.a), reduce(x.b + y.b)}; }
QuadElt TruncQuadExt::sub(QuadElt x, QuadElt y) const { return {reduce(x.a - y.a), reduce(x.b - y.b)}; }
QuadElt TruncQuadExt::neg(QuadElt x) const { return {reduce(-x.a), reduce(-x.b)}; }

QuadElt TruncQuadExt::mul(QuadElt x, QuadElt y) const {
  return {reduce(x.a * y.a + reduce(x.b * y.b) * eps_), reduce(x.a * y.b + x.b * y.a)};
}

QuadElt TruncQuadExt::scale(QuadElt x, int64_t c) const { return {reduce(x.a * reduce(c)), reduce(x.b * reduce(c))}; }
QuadElt TruncQuadExt::conj(QuadElt x) const { return {x.a, reduce(-x.b)}; }
int64_t TruncQuadExt::norm(QuadElt x) const { return reduce(x.a * x.a - reduce(x.b * x.b) * eps_); }
bool TruncQuadExt::is_unit(QuadElt x) const { return norm(x) % p_ != 0; }

namespace {

int64_t inverse_mod(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, aa = a;
  while (aa != 0) {
    int64_t t = g / aa;
    std::tie(g, aa) = std::make_pair(aa, g - t * aa);
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
  }
  if (g != 1) throw std::domain_error("not invertible");
  return ((x % m) + m) % m;
}

}  // namespace

QuadElt TruncQuadExt::inverse(QuadElt x) const {
  if (!is_unit(x)) throw std::domain_error("inverse of a non-unit");
  return scale(conj(x), inverse_mod(norm(x), mod_));
}

TruncVal TruncQuadExt::valuation_int(int64_t x) const {
  x = reduce(x);
  if (x == 0) return {precision_, true};
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return {v, false};
}

TruncVal TruncQuadExt::valuation(QuadElt x) const {
  TruncVal va = valuation_int(x.a), vb = valuation_int(x.b);
  if (va.at_least && vb.at_least) return {precision_, true};
  return {std::min(va.v, vb.v), false};
}

int TruncQuadExt::exact_valuation(QuadElt x) const {
  TruncVal v = valuation(x);
  if (v.at_least) throw InsufficientPrecision("valuation exceeds working precision");
  return v.v;
}

bool TruncQuadExt::valuation_at_least(QuadElt x, int k) const {
  if (k > precision_) throw InsufficientPrecision("threshold exceeds working precision");
  if (k <= 0) return true;
  return valuation(x).v >= k;
}

int64_t TruncQuadExt::power_of_p(int k) const {
  int64_t out = 1;
  for (int i = 0; i < k; ++i) out *= p_;
  return out;
}

QuadElt TruncQuadExt::element(int64_t index) const { return {index % mod_, index / mod_}; }

TruncQuaternion quat_mul(const TruncQuadExt& E, const TruncQuaternion& u, const TruncQuaternion& v) {
  QuadElt x = E.add(E.mul(u.x, v.x), E.scale(E.mul(u.y, E.conj(v.y)), E.p()));
  QuadElt y = E.add(E.mul(u.x, v.y), E.mul(u.y, E.conj(v.x)));
  return {x, y};
}

TruncQuaternion quat_conj(const TruncQuadExt& E, const TruncQuaternion& u) { return {E.conj(u.x), E.neg(u.y)}; }

int64_t quat_norm(const TruncQuadExt& E, const TruncQuaternion& u) {
  return E.reduce(E.norm(u.x) - E.norm(u.y) * E.p());
}

QuadElt hermitian_form(const TruncQuadExt& E, const TruncQuaternion& u, const TruncQuaternion& v) {
  return quat_mul(E, u, quat_conj(E, v)).x;
}

namespace {

Rational q_pow(int64_t q, int e) {
  Rational out = 1;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) out *= q;
  return e >= 0 ? out : Rational(1) / out;
}

void require_unit(const TruncQuadExt& E, QuadElt xi) {
  if (!E.is_unit(xi)) throw std::invalid_argument("disk centre must be a unit");
}

void require_precision(const TruncQuadExt& E, int rho, int n) {
  if (n < std::max(rho, 1)) throw std::invalid_argument("need n >= max(rho, 1)");
  if (E.precision() < n + 1 || E.precision() < rho + 1)
    throw InsufficientPrecision("precision must be >= n+1 and >= rho+1");
}

QuadElt one_minus_norm(const TruncQuadExt& E, QuadElt x) { return {E.reduce(1 - E.norm(x)), 0}; }

Rational lemma_value(const TruncQuadExt& E, int rho, int n) {
  const int64_t q = E.p();
  if (rho <= 0) return q_pow(q, -n) * (1 - q_pow(q, -2));
  return q_pow(q, -(n + rho)) * (1 - q_pow(q, -1));
}

}  // namespace

Rational one_disk_formula(const TruncQuadExt& E, QuadElt xi, int rho, int n) {
  require_unit(E, xi);
  require_precision(E, rho, n);
  if (rho >= 1 && !E.valuation_at_least(one_minus_norm(E, xi), rho)) return 0;
  return lemma_value(E, rho, n);
}

Rational two_disk_formula(const TruncQuadExt& E, QuadElt xi1, QuadElt xi2, int rho1, int rho2, int n) {
  require_unit(E, xi1);
  require_unit(E, xi2);
  if (rho1 < rho2) throw std::invalid_argument("need rho1 >= rho2");
  require_precision(E, rho1, n);
  if (!E.valuation_at_least(one_minus_norm(E, xi1), rho1)) return 0;
  if (!E.valuation_at_least(E.sub(xi1, xi2), rho2)) return 0;
  return lemma_value(E, rho1, n);
}

Rational count_one_disk(const TruncQuadExt& E, QuadElt xi, int rho, int n) {
  require_unit(E, xi);
  require_precision(E, rho, n);
  int64_t count = 0;
  for (int64_t i = 0; i < E.size(); ++i) {
    QuadElt x = E.element(i);
    if (!E.valuation_at_least(E.sub(x, xi), rho)) continue;
    TruncVal w = E.valuation(one_minus_norm(E, x));
    if (!w.at_least && w.v == n) ++count;
  }
  return Rational(count) * q_pow(E.p(), -2 * E.precision());
}

Rational count_two_disk(const TruncQuadExt& E, QuadElt xi1, QuadElt xi2, int rho1, int rho2, int n) {
  require_unit(E, xi1);
  require_unit(E, xi2);
  if (rho1 < rho2) throw std::invalid_argument("need rho1 >= rho2");
  require_precision(E, rho1, n);
  int64_t count = 0;
  for (int64_t i = 0; i < E.size(); ++i) {
    QuadElt x = E.element(i);
    if (!E.valuation_at_least(E.sub(x, xi1), rho1)) continue;
    if (!E.valuation_at_least(E.sub(x, xi2), rho2)) continue;
    TruncVal w = E.valuation(one_minus_norm(E, x));
    if (!w.at_least && w.v == n) ++count;
  }
  return Rational(count) * q_pow(E.p(), -2 * E.precision());
}

InvariantCheck quaternion_invariants(const TruncQuadExt& E, QuadElt lambda, QuadElt alpha, QuadElt beta,
                                     const TruncQuaternion& u) {
  if (!E.is_unit(lambda)) throw InadmissibleTuple("lambda must be invertible");
  if (E.reduce(E.norm(lambda) - (E.norm(alpha) - E.norm(beta) * E.p())) != 0)
    throw InadmissibleTuple("lambda lambda-bar differs from Nm(alpha + beta Pi)");
  const QuadElt zero{0, 0};
  if (!(u.x == zero) && !(u.y == zero)) throw InadmissibleTuple("u = s + t Pi needs s = 0 or t = 0");

  const QuadElt li = E.inverse(lambda);
  // g = lambda^{-1} [[alpha, conj(beta) p], [beta, conj(alpha)]] acting on coordinates (s, t) of s + t Pi.
  const QuadElt m00 = E.mul(li, alpha), m01 = E.mul(li, E.scale(E.conj(beta), E.p()));
  const QuadElt m10 = E.mul(li, beta), m11 = E.mul(li, E.conj(alpha));

  InvariantCheck out;
  out.computed.trace = E.add(m00, m11);
  out.computed.det = E.sub(E.mul(m00, m11), E.mul(m01, m10));
  out.computed.self_pairing = hermitian_form(E, u, u);
  const TruncQuaternion gu_matrix{E.add(E.mul(m00, u.x), E.mul(m01, u.y)), E.add(E.mul(m10, u.x), E.mul(m11, u.y))};
  const TruncQuaternion gu_quat = quat_mul(E, {li, zero}, quat_mul(E, u, {alpha, beta}));
  out.matrix_matches_quaternion = gu_matrix == gu_quat;
  out.computed.g_pairing = hermitian_form(E, gu_quat, u);

  const QuadElt nm_u{quat_norm(E, u), 0};
  out.closed_form.trace = E.mul(li, E.add(alpha, E.conj(alpha)));
  out.closed_form.det = E.mul(E.mul(li, li), {E.reduce(E.norm(alpha) - E.norm(beta) * E.p()), 0});
  out.closed_form.self_pairing = {E.reduce(E.norm(u.x) - E.norm(u.y) * E.p()), 0};
  const bool s_zero = u.x == zero;
  out.closed_form.g_pairing = E.mul(E.mul(li, s_zero ? E.conj(alpha) : alpha), nm_u);

  out.pass = out.matrix_matches_quaternion && out.computed.trace == out.closed_form.trace &&
             out.computed.det == out.closed_form.det && out.computed.self_pairing == out.closed_form.self_pairing &&
             out.computed.g_pairing == out.closed_form.g_pairing;
  return out;
}

}  // namespace semilie

namespace semilie {

VolumeSweep sweep_volume_lemmas(const TruncQuadExt& E) {
  VolumeSweep out;
  const int prec = E.precision();
  const int rho_lo = -1;
  const int n_rho = prec - rho_lo;  // rho in [-1, prec-1]
  const int64_t total = E.size();
  const Rational cell = q_pow(E.p(), -2 * prec);

  auto record = [&](const std::string& what) {
    ++out.mismatch_count;
    if (out.mismatches.size() < 20) out.mismatches.push_back(what);
  };
  auto describe = [](QuadElt x) { return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")"; };

  // v(1 - x xbar) for every x, with -1 meaning "at least precision".
  std::vector<int> nval(total);
  for (int64_t i = 0; i < total; ++i) {
    TruncVal w = E.valuation(one_minus_norm(E, E.element(i)));
    nval[i] = w.at_least ? -1 : w.v;
  }
  std::vector<int64_t> class_mod(n_rho);  // p^{max(rho,0)}
  for (int k = 0; k < n_rho; ++k) class_mod[k] = E.power_of_p(std::max(rho_lo + k, 0));

  // tally[rho1][rho2][class][n]
  std::vector<std::vector<std::vector<std::vector<int64_t>>>> tally(n_rho);
  for (int k1 = 0; k1 < n_rho; ++k1) {
    tally[k1].resize(k1 + 1);
    for (int k2 = 0; k2 <= k1; ++k2)
      tally[k1][k2].assign(class_mod[k2] * class_mod[k2], std::vector<int64_t>(prec, 0));
  }

  for (int64_t ci = 0; ci < total; ++ci) {
    const QuadElt xi1 = E.element(ci);
    if (!E.is_unit(xi1)) continue;
    for (auto& a : tally)
      for (auto& b : a)
        for (auto& c : b) std::fill(c.begin(), c.end(), 0);

    for (int64_t i = 0; i < total; ++i) {
      const int n = nval[i];
      if (n < 1) continue;
      const QuadElt x = E.element(i);
      const TruncVal d = E.valuation(E.sub(x, xi1));
      const int dmax = d.at_least ? prec : d.v;
      for (int k1 = 0; k1 < n_rho && rho_lo + k1 <= dmax; ++k1)
        for (int k2 = 0; k2 <= k1; ++k2) {
          const int64_t m = class_mod[k2];
          tally[k1][k2][(x.a % m) * m + (x.b % m)][n]++;
        }
    }

    for (int k1 = 0; k1 < n_rho; ++k1) {
      const int rho1 = rho_lo + k1;
      for (int n = std::max(rho1, 1); n <= prec - 1; ++n) {
        // One disk: the rho2 = rho1 slice summed over classes is the whole disk.
        int64_t count = 0;
        for (const auto& cls : tally[k1][k1]) count += cls[n];
        ++out.one_disk_checked;
        Rational expect = one_disk_formula(E, xi1, rho1, n);
        if (Rational(count) * cell != expect)
          record("one-disk xi=" + describe(xi1) + " rho=" + std::to_string(rho1) + " n=" + std::to_string(n));

        for (int k2 = 0; k2 <= k1; ++k2) {
          const int rho2 = rho_lo + k2;
          const int64_t m = class_mod[k2];
          for (int64_t a = 0; a < m; ++a)
            for (int64_t b = 0; b < m; ++b) {
              const QuadElt xi2 = m == 1 ? QuadElt{1, 0} : QuadElt{a, b};
              if (!E.is_unit(xi2)) continue;
              const int64_t c2 = tally[k1][k2][a * m + b][n];
              ++out.two_disk_checked;
              Rational expect2 = two_disk_formula(E, xi1, xi2, rho1, rho2, n);
              if (expect2 > 0) ++out.two_disk_positive;
              if (Rational(c2) * cell != expect2)
                record("two-disk xi1=" + describe(xi1) + " xi2=" + describe(xi2) + " rho1=" + std::to_string(rho1) +
                       " rho2=" + std::to_string(rho2) + " n=" + std::to_string(n));
            }
        }
      }
    }
  }
  return out;
}

}  // namespace semilie
