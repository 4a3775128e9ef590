#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semilie/orbital.hpp"

namespace semilie {

struct SweepConfig {
  std::vector<int> rs;
  std::vector<int> sums;  // odd values of vb + vc
  int vb_min = -6;        // vb ranges over [vb_min, vb + vc]
  std::vector<int> ves;
  std::vector<int> vdas;  // kInf allowed
  int satake_rmax = 8;
  int p = 3;
  int precision = 4;
};

// r in [0,6], vb+vc in {1,3,...,11}, vb in [-6, vb+vc], ve in [0,10], vda in {0..6, inf}.
SweepConfig default_grid();
std::vector<int> int_range(int lo, int hi);
// Throws InvalidParams when a range is empty or a sum is even.
void check_config(const SweepConfig& cfg);

void for_each_params(const SweepConfig& cfg, const std::function<void(const OrbitalParams&)>& fn);
// Same tuples with the r coordinate dropped (r fixed to 0).
void for_each_base(const SweepConfig& cfg, const std::function<void(const OrbitalParams&)>& fn);
long grid_size(const SweepConfig& cfg);

}  // namespace semilie
