#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ugsb/core/builders.hpp"
#include "ugsb/dynamics/evolution.hpp"
#include "ugsb/dynamics/lindblad.hpp"

namespace ugsb::gates {

enum class GateKind { holonomic, dynamical };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view s);

enum class SegmentKind { pair, fredkin_pulse, fredkin_swap };

struct GateSegment {
  SegmentKind kind = SegmentKind::pair;
  double duration = 0.0;
  core::ParamSet params;
  std::string label;
};

/// Square-pulse segments run back to back; each starts its laser clock at 0.
struct GateSchedule {
  std::string name;
  GateKind kind = GateKind::holonomic;
  std::vector<GateSegment> segments;

  double total_time() const;
  const core::ParamSet& gate_params() const;
  /// Throws ConfigurationError on non-positive durations or an empty schedule.
  void validate() const;
};

/// Single segment with V at the two-photon resonance (delta = 0) and duration
/// sqrt(2) pi / |W_eff|.
GateSchedule holonomic_swap_schedule(const core::ParamSet& params);
/// Single segment with V set for detuning delta and duration pi / |W_d|.
GateSchedule dynamical_swap_schedule(const core::ParamSet& params, double delta);
GateSchedule swap_schedule(const core::ParamSet& params, GateKind kind, double delta);

/// pi pulse on the control (pi / W_c), target SWAP of the given kind with the
/// control drive off, second pi pulse.
GateSchedule fredkin_schedule(const core::ParamSet& params, GateKind kind, double delta);

core::TimeDepHamiltonian segment_hamiltonian(const GateSegment& segment);

/// Quasi-static per-run perturbations.
struct NoiseOverride {
  std::optional<std::array<double, 2>> doppler;
  std::optional<double> v;
  std::optional<double> tau;
};

void apply_override(core::ParamSet& params, SegmentKind kind, const NoiseOverride& noise);

struct RunOptions {
  dynamics::EvolutionOptions evolution;
  /// Global schedule times to record; the end of the schedule is always recorded last.
  std::vector<double> snapshot_times;
};

/// Computational-subspace columns of the schedule's evolution.
struct ScheduleRun {
  core::LevelScheme scheme;
  std::vector<std::size_t> computational;
  std::vector<double> times;
  /// dimension x 2^atoms blocks, one per recorded time.
  std::vector<Eigen::MatrixXcd> columns;
  dynamics::EvolutionReport report;

  Eigen::MatrixXcd restricted(std::size_t k) const;
  Eigen::MatrixXcd final_restricted() const { return restricted(columns.size() - 1); }
  /// U(t_k) applied to a state that lies in the computational subspace.
  Eigen::VectorXcd state_at(std::size_t k, const Eigen::VectorXcd& psi0) const;
};

ScheduleRun run_schedule(const GateSchedule& schedule, const NoiseOverride& noise = {}, const RunOptions& options = {});

/// Mixed-state run with Rydberg decay (noise.tau required).
dynamics::DensityTrajectory run_schedule_lindblad(const GateSchedule& schedule, const dynamics::DensityMatrix& rho0,
                                                  const NoiseOverride& noise, const RunOptions& options = {});

/// Scheme used when running the schedule under `noise`.
core::LevelScheme run_scheme(const GateSchedule& schedule, const NoiseOverride& noise);

}  // namespace ugsb::gates
