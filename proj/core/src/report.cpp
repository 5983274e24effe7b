#include "lagtor/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

namespace lagtor {

using ordered_json = nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "fail";
}

CheckResult real_check(std::string claim_id, std::string anchor, double measured,
                       double expected, double tolerance) {
  CheckResult r;
  r.claim_id = std::move(claim_id);
  r.paper_anchor = std::move(anchor);
  r.measured = measured;
  r.expected = expected;
  r.tolerance = tolerance;
  r.status = (std::isfinite(measured) && std::abs(measured - expected) <= tolerance)
                 ? CheckStatus::Pass
                 : CheckStatus::Fail;
  return r;
}

CheckResult int_check(std::string claim_id, std::string anchor,
                      std::int64_t measured, std::int64_t expected) {
  CheckResult r;
  r.claim_id = std::move(claim_id);
  r.paper_anchor = std::move(anchor);
  r.measured = measured;
  r.expected = expected;
  r.tolerance = 0.0;
  r.status = (measured == expected) ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult string_check(std::string claim_id, std::string anchor,
                         std::string measured, std::string expected) {
  CheckResult r;
  r.claim_id = std::move(claim_id);
  r.paper_anchor = std::move(anchor);
  r.status = (measured == expected) ? CheckStatus::Pass : CheckStatus::Fail;
  r.measured = std::move(measured);
  r.expected = std::move(expected);
  r.tolerance = 0.0;
  return r;
}

CheckResult failed_check(std::string claim_id, std::string anchor,
                         std::string message, CheckValue expected,
                         double tolerance) {
  CheckResult r;
  r.claim_id = std::move(claim_id);
  r.paper_anchor = std::move(anchor);
  r.status = CheckStatus::Fail;
  r.measured = "error: " + message;
  r.expected = std::move(expected);
  r.tolerance = tolerance;
  return r;
}

VerificationReport assemble_report(std::vector<CheckResult> results,
                                   const ReportConfig& config) {
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.claim_id < b.claim_id; });
  std::set<std::string> seen;
  for (const auto& r : results) {
    if (!seen.insert(r.claim_id).second) {
      throw DuplicateClaim("assemble_report: duplicate claim id " + r.claim_id);
    }
  }
  VerificationReport report;
  report.config = config;
  report.checks = std::move(results);
  report.overall_pass = true;
  for (const auto& r : report.checks) {
    if (r.status == CheckStatus::Fail) report.overall_pass = false;
  }
  return report;
}

namespace {

ordered_json value_to_json(const CheckValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) return std::get<std::int64_t>(v);
  if (std::holds_alternative<double>(v)) return std::get<double>(v);
  return std::get<std::string>(v);
}

CheckValue value_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  return j.get<std::string>();
}

std::string format_value(const CheckValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) {
    return std::to_string(std::get<std::int64_t>(v));
  }
  if (std::holds_alternative<double>(v)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", std::get<double>(v));
    return buf;
  }
  return std::get<std::string>(v);
}

}  // namespace

std::string to_json_string(const VerificationReport& report) {
  ordered_json j;
  j["version"] = report.toolkit_version;
  ordered_json cfg;
  cfg["n"] = report.config.n;
  cfg["epsilon"] = report.config.epsilon;
  cfg["grid"] = report.config.grid;
  cfg["resolution"] = report.config.resolution;
  cfg["tol_geom"] = report.config.tol_geom;
  cfg["seed"] = report.config.seed;
  j["config"] = cfg;
  ordered_json checks = ordered_json::array();
  for (const auto& r : report.checks) {
    ordered_json c;
    c["claim_id"] = r.claim_id;
    c["paper_anchor"] = r.paper_anchor;
    c["status"] = to_string(r.status);
    c["measured"] = value_to_json(r.measured);
    c["expected"] = value_to_json(r.expected);
    c["tolerance"] = r.tolerance;
    c["runtime_ms"] = r.runtime_ms;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["overall"] = report.overall_pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  VerificationReport report;
  report.toolkit_version = j.at("version").get<std::string>();
  const auto& cfg = j.at("config");
  report.config.n = cfg.at("n").get<int>();
  report.config.epsilon = cfg.at("epsilon").get<double>();
  report.config.grid = cfg.at("grid").get<int>();
  report.config.resolution = cfg.at("resolution").get<int>();
  report.config.tol_geom = cfg.at("tol_geom").get<double>();
  report.config.seed = cfg.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    CheckResult r;
    r.claim_id = c.at("claim_id").get<std::string>();
    r.paper_anchor = c.at("paper_anchor").get<std::string>();
    const std::string status = c.at("status").get<std::string>();
    r.status = (status == "pass")
                   ? CheckStatus::Pass
                   : (status == "fail" ? CheckStatus::Fail : CheckStatus::Skipped);
    r.measured = value_from_json(c.at("measured"));
    r.expected = value_from_json(c.at("expected"));
    r.tolerance = c.at("tolerance").get<double>();
    r.runtime_ms = c.at("runtime_ms").get<std::int64_t>();
    report.checks.push_back(r);
  }
  report.overall_pass = j.at("overall").get<std::string>() == "pass";
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::string out;
  out += "lagrangian torus verification toolkit " + report.toolkit_version + "\n";
  char line[256];
  std::snprintf(line, sizeof(line),
                "config: n=%d epsilon=%g grid=%d resolution=%d tol_geom=%g seed=%llu\n\n",
                report.config.n, report.config.epsilon, report.config.grid,
                report.config.resolution, report.config.tol_geom,
                static_cast<unsigned long long>(report.config.seed));
  out += line;
  int passed = 0;
  int counted = 0;
  for (const auto& r : report.checks) {
    std::snprintf(line, sizeof(line), "  [%-7s] %-42s measured=%-22s expected=%-16s tol=%g\n",
                  to_string(r.status).c_str(), r.claim_id.c_str(),
                  format_value(r.measured).c_str(), format_value(r.expected).c_str(),
                  r.tolerance);
    out += line;
    if (r.status != CheckStatus::Skipped) {
      ++counted;
      if (r.status == CheckStatus::Pass) ++passed;
    }
  }
  std::snprintf(line, sizeof(line), "\noverall: %s (%d/%d checks passed)\n",
                report.overall_pass ? "PASS" : "FAIL", passed, counted);
  out += line;
  return out;
}

}  // namespace lagtor
