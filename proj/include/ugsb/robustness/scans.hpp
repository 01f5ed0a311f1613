#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/core/params.hpp"
#include "ugsb/gates/schedule.hpp"
#include "ugsb/robustness/noise.hpp"
#include "ugsb/robustness/sweep_result.hpp"

namespace ugsb::robustness {

/// `count` evenly spaced values from lo to hi inclusive.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 1;

  std::vector<double> values() const;
};

struct ScanOptions {
  gates::RunOptions run;
  unsigned workers = 0;  // 0 = dynamics::default_workers()
};

struct SampleStats {
  double mean = 0.0;
  double standard_error = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Mean taken as x0 + mean(x_i - x0), so identical samples aggregate to x0 exactly.
SampleStats aggregate(std::span<const double> samples);

/// (|0> + |1>)/sqrt(2) (x) (|0> + |1>)/sqrt(2)
Eigen::Vector4cd plus_plus_state();
/// (|0> + |1>)/sqrt(2) (x) |1>
Eigen::Vector4cd plus_one_state();

/// |<SWAP psi0|psi(T)>|^2 for a pure run.
double swap_state_fidelity(const gates::GateSchedule& schedule, const Eigen::Vector4cd& psi0,
                           const gates::NoiseOverride& noise = {}, const gates::RunOptions& run = {});
/// <SWAP psi0|rho(T)|SWAP psi0> with Rydberg decay of lifetime noise.tau.
double swap_state_fidelity_lindblad(const gates::GateSchedule& schedule, const Eigen::Vector4cd& psi0,
                                    const gates::NoiseOverride& noise, const gates::RunOptions& run = {});

/// Holonomic SWAP over D0/W x D1/W (W = omega0). Fields: fidelity,
/// log10_omega_T, v_over_omega, gate_time. Invalid points are NaN.
SweepResult sweep_detunings(const core::ParamSet& base, const Range& delta0_ratio, const Range& delta1_ratio,
                            const ScanOptions& options = {});

/// Dynamical SWAP for each delta (rad/us). Fields: fidelity, gate_time, v.
SweepResult sweep_delta(const core::ParamSet& base, std::span<const double> deltas, const Eigen::Vector4cd& psi0,
                        const ScanOptions& options = {});

/// Lindblad fidelity per lifetime (us); an infinite lifetime runs the pure model.
SweepResult decay_scan(const core::ParamSet& base, gates::GateKind kind, double delta, std::span<const double> taus,
                       const Eigen::Vector4cd& psi0, const ScanOptions& options = {});

/// Mean fidelity over noise.samples quasi-static Doppler pairs per temperature
/// (uK). Temperature k draws from streams 2k and 2k + 1 of noise.seed.
SweepResult doppler_scan(const core::ParamSet& base, gates::GateKind kind, double delta,
                         std::span<const double> temperatures_uk, const NoiseSpec& noise,
                         const Eigen::Vector4cd& psi0, const ScanOptions& options = {});

/// Mean fidelity over noise.samples distances d ~ N(mean, sigma) per sigma (um),
/// with V = C6 / d^6; sigma 0 around the gate's own distance keeps the gate V.
/// Draws with d <= 0 are redrawn and counted.
SweepResult distance_scan(const core::ParamSet& base, gates::GateKind kind, double delta,
                          std::span<const double> sigmas_um, const NoiseSpec& noise, const Eigen::Vector4cd& psi0,
                          const ScanOptions& options = {});

}  // namespace ugsb::robustness
