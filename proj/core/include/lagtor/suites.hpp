#pragma once

#include <vector>

#include "lagtor/report.hpp"

namespace lagtor {

/// Shared configuration of the check suites; mirrors the CLI flags.
struct SuiteConfig {
  int n = 2;
  double epsilon = 0.01;
  int grid = 64;
  int resolution = 512;
  double tol_geom = 1e-12;
  std::uint64_t seed = 0;

  void validate() const;
  ReportConfig report_config() const;
};

std::vector<CheckResult> lagrangian_suite(const SuiteConfig& cfg);
std::vector<CheckResult> maslov_suite(const SuiteConfig& cfg);
std::vector<CheckResult> morse_suite(const SuiteConfig& cfg);
std::vector<CheckResult> symmetry_suite(const SuiteConfig& cfg);

/// Runs at n from the config when n >= 3, at n = 3 otherwise (the torus
/// engine owns n = 2).
std::vector<CheckResult> highdim_suite(const SuiteConfig& cfg);

std::vector<CheckResult> all_suites(const SuiteConfig& cfg);

}  // namespace lagtor
