#pragma once

#include <string>
#include <vector>

#include "semilie/grid.hpp"
#include "semilie/json_io.hpp"

namespace semilie {

struct SuiteResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<json> failures;  // capped
  bool pass() const { return failed == 0; }
  json to_json() const;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orbital", "miracle", "afl", "kernel", "volumes", "satake"};
  return names;
}

// closed form == support sum, s = 0 vanishing, derivative consistency, combo consistency.
SuiteResult verify_orbital_suite(const SweepConfig& cfg);
// GK == D(ve) + D(ve-1) and Int == D.
SuiteResult verify_miracle_suite(const SweepConfig& cfg);
// match_final for r >= 1 and the clean Int° formula for r, ve >= 1.
SuiteResult verify_afl_suite(const SweepConfig& cfg);
// Rank certificates, large-r vanishing and the phi sequence.
SuiteResult verify_kernel_suite(const SweepConfig& cfg);
SuiteResult verify_volumes_suite(const SweepConfig& cfg);
SuiteResult verify_satake_suite(const SweepConfig& cfg);

SuiteResult run_suite(const std::string& name, const SweepConfig& cfg);

}  // namespace semilie
