#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lagtor/errors.hpp"

namespace lagtor {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// Measured/expected values: integer claims, real claims, or structured
/// summaries rendered as strings.
using CheckValue = std::variant<std::int64_t, double, std::string>;

struct CheckResult {
  std::string claim_id;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::Skipped;
  CheckValue measured;
  CheckValue expected;
  double tolerance = 0.0;
  std::int64_t runtime_ms = 0;

  bool operator==(const CheckResult&) const = default;
};

/// Real-valued claim: pass iff |measured - expected| <= tolerance.
CheckResult real_check(std::string claim_id, std::string anchor, double measured,
                       double expected, double tolerance);

/// Integer claim: exact equality, no tolerance.
CheckResult int_check(std::string claim_id, std::string anchor,
                      std::int64_t measured, std::int64_t expected);

/// String-summary claim: exact equality.
CheckResult string_check(std::string claim_id, std::string anchor,
                         std::string measured, std::string expected);

/// Check whose computation threw: always a failure, message as measured.
CheckResult failed_check(std::string claim_id, std::string anchor,
                         std::string message, CheckValue expected,
                         double tolerance);

struct ReportConfig {
  int n = 2;
  double epsilon = 0.01;
  int grid = 64;
  int resolution = 512;
  double tol_geom = 1e-12;
  std::uint64_t seed = 0;

  bool operator==(const ReportConfig&) const = default;
};

struct VerificationReport {
  std::string toolkit_version = kToolkitVersion;
  ReportConfig config;
  std::vector<CheckResult> checks;
  bool overall_pass = true;

  bool operator==(const VerificationReport&) const = default;
};

/// Sorts by claim_id, rejects duplicates, computes the overall verdict
/// (skipped checks do not fail the report).
VerificationReport assemble_report(std::vector<CheckResult> results,
                                   const ReportConfig& config);

/// Stable field order, UTF-8, newline-terminated.
std::string to_json_string(const VerificationReport& report);

VerificationReport report_from_json(const std::string& text);

/// Human-readable table of the same checks.
std::string to_text(const VerificationReport& report);

}  // namespace lagtor
