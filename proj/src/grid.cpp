#include "semilie/grid.hpp"

namespace semilie {

std::vector<int> int_range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

SweepConfig default_grid() {
  SweepConfig cfg;
  cfg.rs = int_range(0, 6);
  cfg.sums = {1, 3, 5, 7, 9, 11};
  cfg.vb_min = -6;
  cfg.ves = int_range(0, 10);
  cfg.vdas = int_range(0, 6);
  cfg.vdas.push_back(kInf);
  return cfg;
}

void check_config(const SweepConfig& cfg) {
  if (cfg.rs.empty() || cfg.sums.empty() || cfg.ves.empty() || cfg.vdas.empty())
    throw InvalidParams("sweep ranges must be nonempty");
  for (int s : cfg.sums)
    if (s < 1 || s % 2 == 0) throw InvalidParams("sweep values of vb+vc must be odd and >= 1");
  for (int r : cfg.rs)
    if (r < 0) throw InvalidParams("sweep values of r must be >= 0");
  for (int v : cfg.vdas)
    if (v < 0) throw InvalidParams("sweep values of vda must be >= 0");
}

void for_each_base(const SweepConfig& cfg, const std::function<void(const OrbitalParams&)>& fn) {
  for (int s : cfg.sums)
    for (int vb = cfg.vb_min; vb <= s; ++vb)
      for (int ve : cfg.ves)
        for (int vda : cfg.vdas) fn(OrbitalParams{0, vb, s - vb, ve, vda, ve < 0});
}

void for_each_params(const SweepConfig& cfg, const std::function<void(const OrbitalParams&)>& fn) {
  for_each_base(cfg, [&](const OrbitalParams& base) {
    for (int r : cfg.rs) fn(base.with_r(r));
  });
}

long grid_size(const SweepConfig& cfg) {
  long n = 0;
  for_each_params(cfg, [&](const OrbitalParams&) { ++n; });
  return n;
}

}  // namespace semilie
