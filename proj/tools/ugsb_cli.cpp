#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ugsb/cli/commands.hpp"
#include "ugsb/cli/presets.hpp"
#include "ugsb/errors.hpp"

namespace {

struct Common {
  std::string config;
  std::string preset;
  ugsb::cli::Overrides o;
  unsigned workers = 0;
  bool quiet = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "scenario JSON file");
  sub->add_option("--preset", c.preset, "bundled scenario name (see list-presets)");
  sub->add_option("--seed", c.o.seed, "master seed");
  sub->add_option("--samples", c.o.samples, "Monte Carlo samples per point");
  sub->add_option("--grid", c.o.grid, "average-fidelity grid N or detuning sweep resolution");
  sub->add_option("--out", c.o.out, "output directory");
  sub->add_option("--mode", c.o.mode, "gate type")->check(CLI::IsMember({"holonomic", "dynamical"}));
  sub->add_option("--aux", c.o.aux, "auxiliary-level treatment")->check(CLI::IsMember({"ideal", "explicit", "off"}));
  sub->add_option("--workers", c.workers, "worker threads (0 = UGSB_WORKERS or all cores)");
  sub->add_flag("--quiet", c.quiet, "no summary on stdout");
}

ugsb::cli::ScenarioConfig load(const Common& c) {
  if (c.config.empty() == c.preset.empty()) throw ugsb::ConfigurationError("give exactly one of --config or --preset");
  const auto base = c.config.empty() ? ugsb::cli::preset_scenario(c.preset) : ugsb::cli::load_scenario(c.config);
  return ugsb::cli::apply_overrides(base, c.o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rydberg-pair SWAP and Fredkin gate simulator"};
  app.require_subcommand(1);
  Common common;
  auto* derive = app.add_subcommand("derive", "effective-model report");
  auto* swap = app.add_subcommand("swap", "SWAP gate time series");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep or noise scan");
  auto* fredkin = app.add_subcommand("fredkin", "Fredkin truth table and gate fidelity");
  auto* list = app.add_subcommand("list-presets", "bundled scenarios");
  for (auto* s : {derive, swap, sweep, fredkin}) add_common(s, common);
  std::string which;
  sweep->add_option("which", which, "detunings | delta | decay | doppler | distance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (list->parsed()) {
      for (const auto& p : ugsb::cli::presets()) std::cout << p.name << "  [" << p.command << "]  " << p.description << '\n';
      return 0;
    }
    const auto config = load(common);
    ugsb::cli::CommandContext ctx;
    ctx.workers = common.workers;
    ctx.log = common.quiet ? nullptr : &std::cout;
    if (derive->parsed()) {
      const auto report = ugsb::cli::cmd_derive(config);
      ugsb::cli::print_derive(std::cout, report, config.params().drive.omega0);
    } else if (swap->parsed()) {
      const auto out = ugsb::cli::cmd_swap(config, ctx);
      std::cerr << "wrote " << out.path << '\n';
    } else if (sweep->parsed()) {
      std::optional<ugsb::cli::SweepKind> kind;
      if (!which.empty()) kind = ugsb::cli::sweep_kind_from_string(which);
      const auto out = ugsb::cli::cmd_sweep(config, kind, ctx);
      std::cerr << "wrote " << out.csv_path << " and " << out.manifest_path << '\n';
    } else if (fredkin->parsed()) {
      const auto out = ugsb::cli::cmd_fredkin(config, ctx);
      std::cerr << "wrote " << out.path << '\n';
    }
  } catch (const ugsb::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
