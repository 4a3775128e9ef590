// Command-line front end: single values, tables and verification sweeps.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "semilie/intersection.hpp"
#include "semilie/json_io.hpp"
#include "semilie/kernel.hpp"
#include "semilie/orbital.hpp"
#include "semilie/padic.hpp"
#include "semilie/satake.hpp"
#include "semilie/verify.hpp"

using namespace semilie;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_valuation(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return kInf;
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw UsageError("bad valuation: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad valuation: " + s);
  }
}

struct Output {
  bool as_json = false;
  std::string at_q;

  std::optional<Rational> q() const {
    if (at_q.empty()) return std::nullopt;
    Rational v;
    if (v.set_str(at_q, 10) != 0) throw UsageError("bad --at-q value: " + at_q);
    v.canonicalize();
    return v;
  }

  void poly(const QPolynomial& p, const std::string& label = "") const {
    QPolynomial shown = q() ? QPolynomial(p.evaluate(*q())) : p;
    if (as_json) {
      json j = poly_to_json(shown);
      if (!label.empty()) j = json{{label, j}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (label.empty() ? "" : label + ": ") << shown.to_string() << "\n";
    }
  }

  void series(const LaurentSeries& s) const {
    LaurentSeries shown = q() ? s.evaluated(*q()) : s;
    if (as_json) {
      std::cout << series_to_json(shown).dump() << "\n";
    } else {
      std::cout << shown.to_string() << "\n";
    }
  }

  void satake(const SatakeY& y) const {
    SatakeY shown;
    if (q()) {
      for (const auto& [i, c] : y.terms()) shown.add(i, QPolynomial(c.evaluate(*q())));
    } else {
      shown = y;
    }
    if (as_json) {
      std::cout << satake_y_to_json(shown).dump() << "\n";
    } else {
      std::cout << shown.to_string() << "\n";
    }
  }
};

struct ParamFlags {
  int r = 0;
  int vb = 0;
  int vc = 1;
  int ve = 0;
  std::string vda = "0";

  void attach(CLI::App* app) {
    app->add_option("-r", r, "Hecke index r");
    app->add_option("--vb", vb, "v(b)");
    app->add_option("--vc", vc, "v(c)");
    app->add_option("--ve", ve, "v(e)");
    app->add_option("--vda", vda, "v(d-a), or inf");
  }

  OrbitalParams params() const {
    OrbitalParams p{r, vb, vc, ve, parse_valuation(vda), ve < 0};
    if (auto err = validation_error(p)) throw UsageError("invalid parameters: " + *err);
    return p;
  }
};

void add_output_flags(CLI::App* app, Output& out) {
  app->add_flag("--json", out.as_json, "JSON output");
  app->add_option("--at-q", out.at_q, "Evaluate at this value of q");
}

int print_suite(const SuiteResult& res, bool as_json) {
  if (as_json) {
    std::cout << res.to_json().dump() << "\n";
  } else {
    std::cout << res.name << ": " << (res.pass() ? "PASS" : "FAIL") << " (" << res.checked << " checks, " << res.failed
              << " failed)\n";
    for (const auto& f : res.failures) std::cout << "  " << f.dump() << "\n";
  }
  return res.pass() ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orbital integrals, intersection numbers and Satake tables for the n=2 semi-Lie case"};
  app.require_subcommand(1);
  int exit_code = kExitPass;

  // orbital
  Output orb_out;
  ParamFlags orb_p;
  bool orb_oracle = false;
  auto* orb = app.add_subcommand("orbital", "Orbital integral as a Laurent polynomial in T = q^s");
  orb_p.attach(orb);
  add_output_flags(orb, orb_out);
  orb->add_flag("--oracle", orb_oracle, "Also evaluate the support-sum derivation and compare");
  orb->callback([&] {
    OrbitalParams p = orb_p.params();
    LaurentSeries s = orbital_closed_form(p);
    orb_out.series(s);
    if (orb_oracle) {
      bool match = orbital_support_sum(p) == s;
      std::cout << (orb_out.as_json ? json{{"oracle_match", match}}.dump() : std::string("oracle: ") + (match ? "match" : "MISMATCH"))
                << "\n";
      if (!match) exit_code = kExitMismatch;
    }
  });

  // derivative
  Output der_out;
  ParamFlags der_p;
  bool der_raw = false;
  auto* der = app.add_subcommand("derivative", "(-1)^{vc+r}/log q times the derivative at s=0");
  der_p.attach(der);
  add_output_flags(der, der_out);
  der->add_flag("--raw", der_raw, "Print (1/log q) dOrb without the (-1)^{vc+r} normalization");
  der->callback([&] {
    OrbitalParams p = der_p.params();
    QPolynomial d = derivative_closed_form(p);
    if (der_raw) d = QPolynomial(sign_pow(p.vc + p.r)) * d;
    der_out.poly(d);
  });

  // combo
  Output combo_out;
  ParamFlags combo_p;
  bool combo_raw = false;
  auto* combo = app.add_subcommand("combo", "Normalized derivative of 1_{<=r} + 1_{<=r-1}");
  combo_p.attach(combo);
  add_output_flags(combo, combo_out);
  combo->add_flag("--raw", combo_raw, "Print (1/log q) dOrb including the sign (-1)^{vc+r}");
  combo->callback([&] {
    OrbitalParams p = combo_p.params();
    if (p.r < 1) throw UsageError("combo needs r >= 1");
    QPolynomial d = derivative_combo(p);
    if (combo_raw) d = QPolynomial(sign_pow(p.vc + p.r)) * d;
    combo_out.poly(d);
  });

  // gk
  Output gk_out;
  ParamFlags gk_p;
  std::optional<int> gk_n1, gk_n2;
  auto* gk = app.add_subcommand("gk", "Gross-Keating polynomial");
  gk->add_option("--n1", gk_n1, "n1");
  gk->add_option("--n2", gk_n2, "n2");
  gk_p.attach(gk);
  add_output_flags(gk, gk_out);
  gk->callback([&] {
    GKPair g;
    if (gk_n1 || gk_n2) {
      if (!gk_n1 || !gk_n2) throw UsageError("give both --n1 and --n2");
      if (*gk_n1 >= 0 && *gk_n2 < *gk_n1) throw UsageError("need n1 <= n2");
      g = {*gk_n1, *gk_n2};
    } else {
      g = gk_from_params(gk_p.params());
    }
    gk_out.poly(gross_keating(g));
  });

  // int
  Output int_out;
  ParamFlags int_p;
  std::string int_kind = "circ";
  auto* intc = app.add_subcommand("int", "Intersection numbers Int°, Int, and Int° against 1_{K,r}");
  int_p.attach(intc);
  add_output_flags(intc, int_out);
  intc->add_option("--kind", int_kind, "circ | total | kr")->check(CLI::IsMember({"circ", "total", "kr"}));
  intc->callback([&] {
    OrbitalParams p = int_p.params();
    if (p.ve < 0) throw UsageError("intersection numbers need ve >= 0");
    if (int_kind == "circ") {
      int_out.poly(int_circ(p));
    } else if (int_kind == "total") {
      int_out.poly(int_total(p));
    } else {
      if (p.r < 1 || p.ve < 1) throw UsageError("--kind kr needs r >= 1 and ve >= 1");
      int_out.poly(int_circ_kr_closed(p));
    }
  });

  // bc
  Output bc_out;
  std::string bc_kind;
  int bc_r = 0;
  std::optional<int> bc_basis;
  bool bc_p_poly = false;
  auto* bc = app.add_subcommand("bc", "Satake images under base change");
  bc->add_option("kind", bc_kind, "s3 | s2 | u3")->required()->check(CLI::IsMember({"s3", "s2", "u3"}));
  bc->add_option("-r", bc_r, "Index r");
  bc->add_option("--basis", bc_basis, "Image of a single basis element");
  bc->add_flag("--p-poly", bc_p_poly, "For s2: print P_r");
  add_output_flags(bc, bc_out);
  bc->callback([&] {
    if (bc_r < 0 || (bc_basis && *bc_basis < 0)) throw UsageError("indices must be >= 0");
    if (bc_kind == "u3") {
      bc_out.satake(satake_u3_indicator(bc_r));
    } else if (bc_kind == "s3") {
      if (bc_basis) {
        bc_out.satake(bc_s3_on_basis(*bc_basis, *bc_basis));
      } else {
        bc_out.satake(bc_s3_aggregate(bc_s3_basis_table(bc_r), bc_r));
      }
    } else if (bc_p_poly) {
      bc_out.satake(p_r_polynomial(bc_r));
    } else if (bc_basis) {
      bc_out.satake(bc_s2_on_basis(*bc_basis));
    } else {
      bc_out.satake(bc_s2_combo(bc_r));
    }
  });

  // kernel-matrix
  Output km_out;
  int km_sum = 1;
  std::string km_vda = "0";
  int km_n = 4;
  std::string km_stage = "M";
  bool km_certify = false;
  auto* km = app.add_subcommand("kernel-matrix", "Matrix of normalized derivatives and its row reductions");
  km->add_option("--sum-bc", km_sum, "v(b)+v(c), odd");
  km->add_option("--vda", km_vda, "v(d-a), or inf");
  km->add_option("-N", km_n, "Largest r");
  km->add_option("--stage", km_stage, "M | M' | M''")->check(CLI::IsMember({"M", "M'", "M''"}));
  km->add_flag("--certify", km_certify, "Certify full rank");
  add_output_flags(km, km_out);
  km->callback([&] {
    DerivMatrix dm = build_matrix(km_sum, parse_valuation(km_vda), km_n);
    PolyMatrix m = dm.m;
    if (km_stage != "M") {
      RowReduction red = row_reduce(dm);
      m = km_stage == "M'" ? red.m1 : red.m2;
    }
    if (auto q = km_out.q())
      for (auto& row : m)
        for (auto& e : row) e = QPolynomial(e.evaluate(*q));
    if (km_out.as_json) {
      json j{{"stage", km_stage}, {"matrix", matrix_to_json(m)}};
      if (km_certify) {
        RankCertificate cert = certify_full_rank(dm);
        j["full_rank"] = cert.full_rank;
        j["rank"] = cert.rank;
        j["pivot_rows"] = cert.pivot_rows;
        j["pivot_product"] = poly_to_json(cert.pivot_product);
        j["notes"] = cert.notes;
        if (!cert.full_rank) exit_code = kExitMismatch;
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << matrix_to_string(m);
      if (km_certify) {
        RankCertificate cert = certify_full_rank(dm);
        std::cout << "rank: " << cert.rank << " of " << dm.cols() << "\n";
        std::cout << "pivot rows:";
        for (int r : cert.pivot_rows) std::cout << " " << r;
        std::cout << "\npivot product: " << cert.pivot_product.to_string() << "\n";
        for (const auto& n : cert.notes) std::cout << "note: " << n << "\n";
        std::cout << "full rank: " << (cert.full_rank ? "yes" : "NO") << "\n";
        if (!cert.full_rank) exit_code = kExitMismatch;
      }
    }
  });

  // volumes
  Output vol_out;
  int vol_p = 3;
  int vol_prec = 4;
  auto* vol = app.add_subcommand("volumes", "Enumerated disk volumes against the volume lemmas");
  vol->add_option("-p", vol_p, "Odd prime");
  vol->add_option("-N", vol_prec, "Precision (enumerates p^{2N} residues)");
  add_output_flags(vol, vol_out);
  vol->callback([&] {
    SweepConfig cfg = default_grid();
    cfg.p = vol_p;
    cfg.precision = vol_prec;
    exit_code = print_suite(verify_volumes_suite(cfg), vol_out.as_json);
  });

  // verify
  std::string suite;
  bool ver_json = false;
  bool default_grid_flag = false;
  SweepConfig cfg = default_grid();
  std::optional<int> r_max, sum_max, ve_max, vda_max;
  auto* ver = app.add_subcommand("verify", "Run identity suites over a parameter grid");
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  ver->add_option("suite", suite, "orbital | miracle | afl | kernel | volumes | satake | all")
      ->required()
      ->check(CLI::IsMember(allowed));
  ver->add_flag("--default-grid", default_grid_flag, "Use the default grid (the default)");
  ver->add_option("--r-max", r_max, "Largest r (grid from 0)");
  ver->add_option("--sum-max", sum_max, "Largest odd vb+vc (grid from 1)");
  ver->add_option("--ve-max", ve_max, "Largest ve (grid from 0)");
  ver->add_option("--vda-max", vda_max, "Largest finite vda (grid from 0, plus inf)");
  ver->add_option("--vb-min", cfg.vb_min, "Smallest vb");
  ver->add_option("--rmax", cfg.satake_rmax, "Largest r for the satake suite");
  ver->add_option("-p", cfg.p, "Prime for the volumes suite");
  ver->add_option("-N", cfg.precision, "Precision for the volumes suite");
  ver->add_flag("--json", ver_json, "JSON report");
  ver->callback([&] {
    if (r_max) cfg.rs = int_range(0, *r_max);
    if (sum_max) {
      cfg.sums.clear();
      for (int s = 1; s <= *sum_max; s += 2) cfg.sums.push_back(s);
    }
    if (ve_max) cfg.ves = int_range(0, *ve_max);
    if (vda_max) {
      cfg.vdas = int_range(0, *vda_max);
      cfg.vdas.push_back(kInf);
    }
    try {
      check_config(cfg);
    } catch (const InvalidParams& e) {
      throw UsageError(e.what());
    }
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    int code = kExitPass;
    for (const auto& n : names)
      if (print_suite(run_suite(n, cfg), ver_json) != kExitPass) code = kExitMismatch;
    exit_code = code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
