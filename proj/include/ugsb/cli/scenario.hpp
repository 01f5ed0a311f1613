#pragma once

// Scenario files (JSON):
//
// {
//   "name": "fig4_holonomic",
//   "params": { ...see core/param_io.hpp... },
//   "gate": "holonomic",                 // or "dynamical"
//   "delta_MHz": 3.36,                   // dynamical detuning
//   "initial_state": "fig4",             // preset name or [[re, im] x 4]
//   "average_grid": 21,                  // optional, swap command
//   "time_points": 201,                  // swap command
//   "noise": {"temperature_uK": 10, "k_eff_per_m": 8.76e6, "mass_kg": 1.443e-25,
//             "mean_distance_um": 4.03, "sigma_distance_um": 0.001, "tau_us": 400, "samples": 201},
//   "sweep": {"kind": "doppler", "values": [0, 5, 10],
//             "delta0_over_omega": [5, 20, 31], "delta1_over_omega": [20.1, 40, 40]},
//   "output": {"dir": "out"},
//   "seed": 7
// }
//
// Only "params" is required. Keys are echoed back exactly as read.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "ugsb/core/params.hpp"
#include "ugsb/gates/schedule.hpp"
#include "ugsb/robustness/noise.hpp"
#include "ugsb/robustness/scans.hpp"

namespace ugsb::cli {

enum class SweepKind { detunings, delta, decay, doppler, distance };

std::string_view to_string(SweepKind kind);
SweepKind sweep_kind_from_string(std::string_view s);

struct SweepSpec {
  std::optional<SweepKind> kind;
  std::vector<double> values;
  std::optional<robustness::Range> delta0_ratio;
  std::optional<robustness::Range> delta1_ratio;
};

struct ScenarioConfig {
  std::string name;
  nlohmann::json params_json;
  std::optional<std::string> gate;
  std::optional<double> delta_mhz;
  nlohmann::json initial_state;  // null when unset
  std::optional<int> average_grid;
  std::optional<int> time_points;
  nlohmann::json noise_json;     // null when unset
  nlohmann::json sweep_json;     // null when unset
  nlohmann::json output_json;    // null when unset
  std::optional<std::uint64_t> seed;

  core::ParamSet params() const;
  gates::GateKind gate_kind() const;
  /// rad/us; 0 when unset.
  double delta() const;
  Eigen::Vector4cd initial() const;
  robustness::NoiseSpec noise() const;
  SweepSpec sweep() const;
  std::string output_dir() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioConfig& config);
ScenarioConfig load_scenario(const std::string& path);

/// "plus_plus", "plus_one", "fig4", "00", "01", "10", "11".
Eigen::Vector4cd named_state(std::string_view name);

}  // namespace ugsb::cli
