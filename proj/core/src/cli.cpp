#include "lagtor/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "lagtor/report.hpp"
#include "lagtor/suites.hpp"

namespace lagtor {

namespace {

using SuiteFn = std::vector<CheckResult> (*)(const SuiteConfig&);

struct SuiteEntry {
  const char* name;
  const char* help;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"lagrangian", "embedding, flow and fiber-intersection checks", &lagrangian_suite},
    {"maslov", "disk areas, Maslov indices and monotonicity", &maslov_suite},
    {"morse", "critical points, flow lines, differential and homology", &morse_suite},
    {"symmetry", "involution, fixed locus and invariance checks", &symmetry_suite},
    {"highdim", "S^1 x S^{n-1} generalization checks", &highdim_suite},
    {"all", "every suite", &all_suites},
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification suites for the geodesic-flow Lagrangian torus in T*S^2"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string format = "text";
  std::string out_path;

  app.add_option("--n", cfg.n, "sphere dimension for the high-dim suite")
      ->default_val(2)
      ->check(CLI::Range(2, 6));
  app.add_option("--epsilon", cfg.epsilon, "Morse amplitude")
      ->default_val(0.01)
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grid, "grid size for pointwise verifications")
      ->default_val(64)
      ->check(CLI::Range(2, 1 << 20));
  app.add_option("--resolution", cfg.resolution, "loop sampling resolution")
      ->default_val(512)
      ->check(CLI::Range(64, 1 << 20));
  app.add_option("--tol-geom", cfg.tol_geom, "constraint maintenance tolerance")
      ->default_val(1e-12);
  app.add_option("--seed", cfg.seed, "seed for random sampling")->default_val(0);
  app.add_option("--format", format, "report format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  SuiteFn selected = nullptr;
  for (const auto& entry : kSuites) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    sub->callback([&selected, &entry] { selected = entry.fn; });
  }
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  VerificationReport report;
  try {
    report = assemble_report(selected(cfg), cfg.report_config());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string rendered = (format == "json") ? to_json_string(report) : to_text(report);
  if (out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << "\n";
      return 2;
    }
    file << rendered;
  }
  return report.overall_pass ? 0 : 1;
}

}  // namespace lagtor
