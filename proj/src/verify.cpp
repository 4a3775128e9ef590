#include "semilie/verify.hpp"

#include <algorithm>

#include "semilie/intersection.hpp"
#include "semilie/kernel.hpp"
#include "semilie/padic.hpp"
#include "semilie/satake.hpp"

namespace semilie {

namespace {

constexpr size_t kMaxFailures = 20;

struct Collector {
  SuiteResult res;
  explicit Collector(std::string name) { res.name = std::move(name); }
  void check(bool ok, const std::function<json()>& detail) {
    ++res.checked;
    if (ok) return;
    ++res.failed;
    if (res.failures.size() < kMaxFailures) res.failures.push_back(detail());
  }
  void report(const IdentityReport& r, const std::string& identity) {
    check(r.pass, [&] {
      json j = report_to_json(r);
      j["identity"] = identity;
      return j;
    });
  }
};

json poly_pair(const std::string& what, const QPolynomial& lhs, const QPolynomial& rhs) {
  return {{"identity", what}, {"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}};
}

json y_pair(const std::string& what, int r, const SatakeY& lhs, const SatakeY& rhs) {
  return {{"identity", what}, {"r", r}, {"lhs", satake_y_to_json(lhs)}, {"rhs", satake_y_to_json(rhs)}};
}

}  // namespace

json SuiteResult::to_json() const {
  return {{"suite", name}, {"checked", checked}, {"failed", failed}, {"pass", pass()}, {"failures", failures}};
}

SuiteResult verify_orbital_suite(const SweepConfig& cfg) {
  Collector c("orbital");
  for_each_params(cfg, [&](const OrbitalParams& p) {
    const LaurentSeries closed = orbital_closed_form(p);
    const LaurentSeries oracle = orbital_support_sum(p);
    c.check(closed == oracle, [&] {
      return json{{"identity", "closed form == support sum"}, {"params", params_to_json(p)},
                  {"lhs", series_to_json(closed)}, {"rhs", series_to_json(oracle)}};
    });
    const QPolynomial at_one = series_at_one(closed);
    c.check(at_one.is_zero(), [&] {
      json j = poly_pair("series at T=1 vanishes", at_one, QPolynomial());
      j["params"] = params_to_json(p);
      return j;
    });
    const QPolynomial d = derivative_closed_form(p);
    const QPolynomial sym = QPolynomial(sign_pow(p.vc + p.r)) * series_log_derivative_at_zero(closed);
    c.check(d == sym, [&] {
      json j = poly_pair("derivative closed form == symbolic derivative", d, sym);
      j["params"] = params_to_json(p);
      return j;
    });
    if (p.r >= 1) {
      const QPolynomial combo = derivative_combo(p);
      const QPolynomial diff = d - derivative_closed_form(p.with_r(p.r - 1));
      c.check(combo == diff, [&] {
        json j = poly_pair("combo == D(r) - D(r-1)", combo, diff);
        j["params"] = params_to_json(p);
        return j;
      });
    }
  });
  return c.res;
}

SuiteResult verify_miracle_suite(const SweepConfig& cfg) {
  Collector c("miracle");
  for_each_params(cfg, [&](const OrbitalParams& p) {
    if (p.ve < 0) return;
    c.report(verify_miracle(p), "GK == D(ve) + D(ve-1)");
    c.report(verify_int_total(p), "Int == D");
  });
  return c.res;
}

SuiteResult verify_afl_suite(const SweepConfig& cfg) {
  Collector c("afl");
  for_each_params(cfg, [&](const OrbitalParams& p) {
    if (p.ve < 0 || p.r < 1) return;
    c.report(verify_afl(p), "(-1)^r [Int(r) - Int(r-1)] == -omega dOrb(1_{<=r} + 1_{<=r-1})");
    if (p.ve >= 1) c.report(verify_clean_intersection(p), "closed Int° == GK difference");
  });
  return c.res;
}

SuiteResult verify_kernel_suite(const SweepConfig& cfg) {
  Collector c("kernel");
  for (int s : {1, 3, 5, 17})
    for (int vda : {0, 1, 2, 8})
      for (int n = 1; n <= 6; ++n) {
        const RankCertificate cert = certify_full_rank(build_matrix(s, vda, n));
        c.check(cert.full_rank, [&] {
          return json{{"identity", "full rank"}, {"sum_bc", s}, {"vda", vda}, {"N", n}, {"notes", cert.notes}};
        });
      }
  for_each_base(cfg, [&](const OrbitalParams& base) {
    if (base.ve < 0) return;
    for (int r = base.ve + 2; r <= base.ve + 8; ++r) {
      const VanishingReport rep = test_large_r_vanishing(base.with_r(r));
      c.check(rep.pass, [&] {
        return json{{"identity", "large-r combination vanishes"}, {"params", params_to_json(rep.params)},
                    {"value", poly_to_json(rep.value)}};
      });
    }
    for (int r = 5; r <= base.ve + 12; ++r) {
      const VanishingReport rep = test_phi_sequence(base, r);
      if (!rep.asserted) continue;
      c.check(rep.pass, [&] {
        return json{{"identity", "phi sequence vanishes outside window"}, {"params", params_to_json(rep.params)},
                    {"value", poly_to_json(rep.value)}};
      });
    }
  });
  return c.res;
}

SuiteResult verify_volumes_suite(const SweepConfig& cfg) {
  Collector c("volumes");
  const TruncQuadExt E(cfg.p, cfg.precision);
  const VolumeSweep sweep = sweep_volume_lemmas(E);
  c.res.checked = sweep.one_disk_checked + sweep.two_disk_checked;
  c.res.failed = sweep.mismatch_count;
  for (const auto& m : sweep.mismatches) c.res.failures.push_back(json{{"mismatch", m}});
  return c.res;
}

SuiteResult verify_satake_suite(const SweepConfig& cfg) {
  Collector c("satake");
  const int rmax = cfg.satake_rmax;
  const QPolynomial q = QPolynomial::monomial(1, 1);
  const QPolynomial q2 = QPolynomial::monomial(1, 2);
  const QPolynomial q3 = QPolynomial::monomial(1, 3);
  auto gl3 = [](int r) { return r < 0 ? SatakeGL(3) : satake_gl_det(3, r); };
  auto proj = [](int r) { return r < 0 ? std::map<int, QPolynomial>{} : proj_fiber_gl3(r); };
  auto combine = [](std::vector<std::pair<QPolynomial, std::map<int, QPolynomial>>> parts) {
    std::map<int, QPolynomial> out;
    for (const auto& [w, v] : parts)
      for (const auto& [j, cj] : v) out[j] += w * cj;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  };

  const std::vector<SatakeY> table = bc_s3_basis_table(rmax);
  std::vector<SatakeY> via_gl3;  // images of 1_{S,j} solved from BC o Sat and the fiber integral
  for (int r = 0; r <= rmax; ++r) {
    const SatakeY image = bc_gl3_to_u3(gl3(r) + (-q2) * gl3(r - 1));
    const SatakeY target = bc_gl3_det_difference_target(r);
    c.check(image == target, [&] { return y_pair("BC(Sat(f'_r - q^2 f'_{r-1}))", r, image, target); });

    const auto fiber = combine({{QPolynomial(1), proj(r)}, {-q2, proj(r - 1)}});
    bool fiber_ok = true;
    for (int j = 0; j <= r; ++j) fiber_ok = fiber_ok && fiber.count(j) && fiber.at(j) == QPolynomial::geometric(r - j);
    c.check(fiber_ok && static_cast<int>(fiber.size()) == r + 1,
            [&] { return json{{"identity", "proj(r) - q^2 proj(r-1)"}, {"r", r}}; });

    const auto weights = combine({{QPolynomial(1), proj(r)}, {q - q2, proj(r - 1)}, {-q3, proj(r - 2)}});
    bool weights_ok = static_cast<int>(weights.size()) == r + 1;
    for (int j = 0; j <= r && weights_ok; ++j) weights_ok = weights.count(j) && weights.at(j) == odd_weight(r - j);
    c.check(weights_ok, [&] { return json{{"identity", "fiber weights 1 + 2q + ... + 2q^{r-j}"}, {"r", r}}; });

    SatakeY x = image;
    for (int j = 0; j < r; ++j) x -= QPolynomial::geometric(r - j) * via_gl3[j];
    via_gl3.push_back(x);
    c.check(x == table[r], [&] { return y_pair("basis image agrees across both solves", r, x, table[r]); });

    const SatakeY agg = bc_s3_aggregate(table, r);
    const SatakeY u3 = satake_u3_indicator(r);
    c.check(agg == u3, [&] { return y_pair("BC_S3 first identity", r, agg, u3); });

    SatakeY second = table[r];
    for (int j = 0; j < r; ++j) second += QPolynomial::monomial(2, r - j) * table[j];
    const SatakeY diff = u3 - (r >= 1 ? satake_u3_indicator(r - 1) : SatakeY());
    c.check(second == diff, [&] { return y_pair("BC_S3 second identity", r, second, diff); });

    const SatakeY lhs2 = bc_s2_on_basis(r) + (r >= 1 ? bc_s2_on_basis(r - 1) : SatakeY());
    const SatakeY combo2 = bc_s2_combo(r);
    c.check(lhs2 == combo2, [&] { return y_pair("n=2 basis images sum to the combo image", r, lhs2, combo2); });

    SatakeY pr = bc_s2_on_basis(r);
    if (r >= 1) pr += QPolynomial(2) * bc_s2_on_basis(r - 1);
    if (r >= 2) pr += bc_s2_on_basis(r - 2);
    pr = QPolynomial(sign_pow(r)) * pr;
    c.check(pr == p_r_polynomial(r), [&] { return y_pair("P_r from basis images", r, pr, p_r_polynomial(r)); });

    if (r >= 2) {
      const SatakeY step = p_r_polynomial(r) - q * p_r_polynomial(r - 1);
      SatakeY shape;
      shape.add(r, QPolynomial::monomial(1, r));
      shape.add(r - 1, QPolynomial::monomial(-2, r - 1));
      shape.add(r - 2, QPolynomial::monomial(1, r - 2));
      c.check(step == shape, [&] { return y_pair("P_r - q P_{r-1} three-term shape", r, step, shape); });
    }
  }
  return c.res;
}

SuiteResult run_suite(const std::string& name, const SweepConfig& cfg) {
  check_config(cfg);
  if (name == "orbital") return verify_orbital_suite(cfg);
  if (name == "miracle") return verify_miracle_suite(cfg);
  if (name == "afl") return verify_afl_suite(cfg);
  if (name == "kernel") return verify_kernel_suite(cfg);
  if (name == "volumes") return verify_volumes_suite(cfg);
  if (name == "satake") return verify_satake_suite(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace semilie
