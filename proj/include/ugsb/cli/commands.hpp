#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ugsb/cli/scenario.hpp"
#include "ugsb/dynamics/trajectory_io.hpp"
#include "ugsb/gates/truth_table.hpp"
#include "ugsb/perturbation/effective_model.hpp"
#include "ugsb/robustness/sweep_result.hpp"

namespace ugsb::cli {

/// Command-line values that take precedence over the scenario file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<int> grid;
  std::optional<std::string> out;
  std::optional<std::string> mode;
  std::optional<std::string> aux;
};

ScenarioConfig apply_overrides(const ScenarioConfig& config, const Overrides& o);

struct CommandContext {
  unsigned workers = 0;
  bool write_files = true;
  std::ostream* log = nullptr;
};

struct DeriveReport {
  perturbation::EffectiveModel holonomic;  // at delta = 0
  double v_holonomic = 0.0;
  std::optional<double> distance_holonomic;
  std::optional<double> t_holonomic;
  bool degenerate = false;
  std::optional<perturbation::EffectiveModel> dynamical;
  std::optional<perturbation::DispersiveResult> dispersive;
  double v_dynamical = 0.0;
  std::optional<double> distance_dynamical;
};

DeriveReport cmd_derive(const ScenarioConfig& config);
/// "key = value" lines, frequencies as nu/2pi in MHz.
void print_derive(std::ostream& os, const DeriveReport& report, double omega);
nlohmann::ordered_json derive_json(const DeriveReport& report, double omega);

struct SwapOutput {
  dynamics::TimeSeries series;
  double gate_time = 0.0;
  double final_fidelity = 0.0;
  std::optional<double> final_average;
  std::string path;
};

/// Columns t_us, fidelity, P00, P01, P10, P11, Prr and avg_fidelity when a grid is set.
SwapOutput cmd_swap(const ScenarioConfig& config, const CommandContext& ctx = {});

struct SweepOutput {
  robustness::SweepResult result;
  std::string csv_path;
  std::string manifest_path;
};

SweepOutput cmd_sweep(const ScenarioConfig& config, std::optional<SweepKind> which, const CommandContext& ctx = {});

struct FredkinOutput {
  gates::TruthTable table;
  double gate_fidelity = 0.0;
  double gate_time = 0.0;
  std::string path;
};

FredkinOutput cmd_fredkin(const ScenarioConfig& config, const CommandContext& ctx = {});

}  // namespace ugsb::cli
