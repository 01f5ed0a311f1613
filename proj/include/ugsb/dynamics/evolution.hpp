#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/core/hamiltonian.hpp"
#include "ugsb/dynamics/integrator.hpp"

namespace ugsb::dynamics {

using cplx = std::complex<double>;

enum class Acceleration {
  automatic,  // periodic path when detected and estimated cheaper
  off,
  periodic,   // periodic path whenever a common period exists
};

struct EvolutionOptions {
  IntegratorOptions integrator;
  Acceleration acceleration = Acceleration::automatic;
  int max_denominator = 64;
  /// Tolerances of the one-period map integration.
  double period_rtol = 1e-13;
  double period_atol = 1e-15;
  bool check_invariants = true;
  double norm_tolerance = 1e-9;
  double unitarity_tolerance = 1e-8;
};

struct EvolutionReport {
  IntegratorStats stats;
  bool periodic = false;
  double period = 0.0;
  std::uint64_t periods = 0;
};

struct QuantumState {
  Eigen::VectorXcd amplitudes;
  core::Frame frame = core::Frame::interaction;

  double norm() const { return amplitudes.norm(); }
  /// Throws InvariantViolation when |norm - 1| > tol.
  void check_normalized(double tol = 1e-9) const;

  static QuantumState basis(const core::LevelScheme& scheme, std::size_t index);
  /// Superposition over the computational kets (binary order 00.., 01.., ...).
  static QuantumState computational(const core::LevelScheme& scheme, std::span<const cplx> amplitudes);
  /// Product of single-qubit states a_j|0> + b_j|1>, one pair per atom.
  static QuantumState product(const core::LevelScheme& scheme, std::span<const std::array<cplx, 2>> qubits);
};

struct StateTrajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  EvolutionReport report;

  const Eigen::VectorXcd& final_state() const { return states.back(); }
};

/// Time-ordered evolution of the listed basis kets; snapshots[k] is
/// dimension x subspace.size() with column c = U(t_k, t0)|subspace[c]>.
struct Propagator {
  std::vector<std::size_t> subspace;
  std::vector<double> times;
  std::vector<Eigen::MatrixXcd> snapshots;
  EvolutionReport report;

  /// Rows restricted to the subspace: <subspace[r]| U |subspace[c]>.
  Eigen::MatrixXcd restricted(std::size_t k) const;
  Eigen::MatrixXcd final_restricted() const { return restricted(snapshots.size() - 1); }
};

/// Solves i d|psi>/dt = H(t)|psi> from t0 to t1 and records the state at each
/// snapshot time (just t1 when none are given). Norm drift beyond
/// options.norm_tolerance raises InvariantViolation; nothing is renormalized.
StateTrajectory integrate_schrodinger(const core::TimeDepHamiltonian& h, const QuantumState& psi0, double t0,
                                      double t1, std::span<const double> snapshot_times = {},
                                      const EvolutionOptions& options = {});

Propagator propagator(const core::TimeDepHamiltonian& h, std::span<const std::size_t> subspace, double t0,
                      double t1, std::span<const double> snapshot_times = {},
                      const EvolutionOptions& options = {});

/// Integrates a block of states at once (rows = basis, columns = states).
/// Used by both entry points above; exposed for callers that reuse columns.
std::vector<Eigen::MatrixXcd> evolve_columns(const core::TimeDepHamiltonian& h, const Eigen::MatrixXcd& y0,
                                             double t0, double t1, std::span<const double> snapshot_times,
                                             const EvolutionOptions& options, EvolutionReport* report = nullptr);

/// Step ceiling 2 pi / (20 w_max), or 0 when the Hamiltonian has no oscillating term.
double step_ceiling(double max_frequency);

}  // namespace ugsb::dynamics
