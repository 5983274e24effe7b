#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lagtor/cli.hpp"
#include "lagtor/report.hpp"

using namespace lagtor;

namespace {

VerificationReport sample_report(bool with_failure) {
  std::vector<CheckResult> checks;
  checks.push_back(real_check("beta", "proof: a real claim", 0.5, 0.5 + 1e-12, 1e-9));
  checks.push_back(int_check("alpha", "intro: an integer claim", 2, 2));
  checks.push_back(string_check("gamma", "remark: a summary claim", "(1,2,1)", "(1,2,1)"));
  if (with_failure) {
    checks.push_back(real_check("delta", "proof: a failing claim", 1.0, 0.0, 1e-3));
  }
  return assemble_report(std::move(checks), ReportConfig{});
}

}  // namespace

TEST_CASE("status rules") {
  CHECK(real_check("a", "x", 1.0, 1.0 + 5e-7, 1e-6).status == CheckStatus::Pass);
  CHECK(real_check("a", "x", 1.0, 1.0 + 5e-6, 1e-6).status == CheckStatus::Fail);
  CHECK(int_check("a", "x", 2, 2).status == CheckStatus::Pass);
  CHECK(int_check("a", "x", 3, 2).status == CheckStatus::Fail);
  CHECK(string_check("a", "x", "u", "u").status == CheckStatus::Pass);
  CHECK(string_check("a", "x", "u", "w").status == CheckStatus::Fail);
  CHECK(failed_check("a", "x", "boom", 0.0, 1e-9).status == CheckStatus::Fail);
}

TEST_CASE("assembly sorts, deduplicates and aggregates") {
  const VerificationReport good = sample_report(false);
  CHECK(good.overall_pass);
  REQUIRE(good.checks.size() == 3);
  CHECK(good.checks[0].claim_id == "alpha");
  CHECK(good.checks[1].claim_id == "beta");
  CHECK(good.checks[2].claim_id == "gamma");

  const VerificationReport bad = sample_report(true);
  CHECK(!bad.overall_pass);

  std::vector<CheckResult> dup;
  dup.push_back(int_check("same", "x", 1, 1));
  dup.push_back(int_check("same", "x", 2, 2));
  CHECK_THROWS_AS(assemble_report(std::move(dup), ReportConfig{}), DuplicateClaim);
}

TEST_CASE("JSON round-trip reproduces the report exactly") {
  for (const bool with_failure : {false, true}) {
    const VerificationReport report = sample_report(with_failure);
    const std::string json = to_json_string(report);
    CHECK(json.back() == '\n');
    const VerificationReport parsed = report_from_json(json);
    CHECK(parsed == report);
    CHECK(to_json_string(parsed) == json);
  }
}

TEST_CASE("serialization is deterministic") {
  CHECK(to_json_string(sample_report(false)) == to_json_string(sample_report(false)));
  CHECK(to_text(sample_report(false)) == to_text(sample_report(false)));
}

TEST_CASE("text rendering carries the verdict and the claims") {
  const std::string text = to_text(sample_report(true));
  CHECK(text.find("alpha") != std::string::npos);
  CHECK(text.find("delta") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(to_text(sample_report(false)).find("PASS") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2") {
  std::ostringstream out, err;

  const char* bad_cmd[] = {"verify", "bogus"};
  CHECK(run_cli(2, bad_cmd, out, err) == 2);

  const char* no_cmd[] = {"verify"};
  CHECK(run_cli(1, no_cmd, out, err) == 2);

  const char* bad_n[] = {"verify", "morse", "--n", "9"};
  CHECK(run_cli(4, bad_n, out, err) == 2);

  const char* help[] = {"verify", "--help"};
  CHECK(run_cli(2, help, out, err) == 0);
}
