// jcsum: atomic inversion of the Jaynes-Cummings model with a coherent field,
// by exact sum, contour quadrature, saddle points and closed-form asymptotics.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jcsum/app/acceptance.hpp"
#include "jcsum/app/commands.hpp"
#include "jcsum/app/config.hpp"
#include "jcsum/error.hpp"

namespace {

struct RawOptions {
  std::vector<std::string> methods{"exact"};
  std::string unit = "lambda-t";
  std::string format = "csv";
  std::string policy = "sum";
  std::string static_part = "exact";
  std::string revival_mode;
};

jcsum::app::RunConfig finish(jcsum::app::RunConfig cfg, const RawOptions& raw) {
  using namespace jcsum::app;
  cfg.methods.clear();
  for (const auto& m : raw.methods) cfg.methods.push_back(parse_method(m));
  cfg.unit = jcsum::parse_time_unit(raw.unit);
  cfg.format = parse_format(raw.format);
  cfg.policy = parse_policy(raw.policy);
  cfg.static_part = parse_static_part(raw.static_part);
  if (!raw.revival_mode.empty()) cfg.revival_mode = parse_revival_mode(raw.revival_mode);
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jaynes-Cummings atomic inversion: exact sum, contour quadrature, saddle points"};
  app.set_version_flag("--version", JCSUM_VERSION);
  app.set_config("--config", "", "TOML/INI file with option values; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  jcsum::app::RunConfig cfg;
  RawOptions raw;
  app.add_option("--alpha", cfg.alpha, "Coherent amplitude |alpha|")->capture_default_str();
  app.add_option("--nu", cfg.nu, "Relative detuning nu = mu / |alpha|^2")->capture_default_str();
  app.add_option("--methods", raw.methods, "exact, contour, saddle, collapse, revival")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--branches", cfg.branches, "Signed revival indices (default: all that matter)")->delimiter(',');
  app.add_option("--t-start", cfg.t_start, "First grid time")->capture_default_str();
  app.add_option("--t-stop", cfg.t_stop, "Last grid time")->capture_default_str();
  app.add_option("--t-count", cfg.t_count, "Number of grid points")->capture_default_str();
  app.add_option("--unit", raw.unit, "lambda-t, t-over-alpha or t-over-T")->capture_default_str();
  app.add_option("--format", raw.format, "csv or json")->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  app.add_option("--policy", raw.policy, "Saddle superposition: sum or max")->capture_default_str();
  app.add_option("--static-part", raw.static_part, "exact, minus-nu or none")->capture_default_str();
  app.add_option("--revival-mode", raw.revival_mode, "full or simplified (default: full at nu = 0)");
  app.add_flag("--per-branch", cfg.per_branch, "Add one column per saddle branch");

  auto* inversion = app.add_subcommand("inversion", "Inversion time series by the selected methods");
  auto* trajectory = app.add_subcommand("trajectory", "Saddle trajectories F(tau) and phi along the grid");
  auto* times = app.add_subcommand("times", "Revival and crossing times, collapse width");
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  jcsum::app::AcceptanceOptions acc;
  selftest->add_option("--tolerance-scale", acc.tolerance_scale, "Multiply every tolerance (negative control)")
      ->capture_default_str();
  selftest->add_option("--only", acc.only, "Criterion ids to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (selftest->parsed()) return jcsum::app::cmd_selftest(acc, std::cout);
    const auto run = finish(cfg, raw);
    if (inversion->parsed()) return jcsum::app::cmd_inversion(run, std::cout);
    if (trajectory->parsed()) return jcsum::app::cmd_trajectory(run, std::cout);
    if (times->parsed()) return jcsum::app::cmd_times(run, std::cout);
  } catch (const jcsum::InvalidParameter& e) {
    std::cerr << "jcsum: " << e.what() << '\n';
    return 2;
  } catch (const jcsum::Error& e) {
    std::cerr << "jcsum: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "jcsum: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
