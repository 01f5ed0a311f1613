#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/core/hamiltonian.hpp"
#include "ugsb/dynamics/evolution.hpp"

namespace ugsb::dynamics {

/// Spontaneous emission from |r> of every atom: rates g0 = g1 = 1/(8 tau) into
/// |0>, |1> and g2 = 3/(4 tau) into the absorbing leak level |2>.
struct DecayModel {
  double tau = std::numeric_limits<double>::infinity();

  double gamma0() const { return 1.0 / (8.0 * tau); }
  double gamma1() const { return 1.0 / (8.0 * tau); }
  double gamma2() const { return 3.0 / (4.0 * tau); }
  double total() const { return gamma0() + gamma1() + gamma2(); }
  bool active() const { return std::isfinite(tau); }
};

struct DensityMatrix {
  Eigen::MatrixXcd rho;
  core::Frame frame = core::Frame::interaction;

  static DensityMatrix pure(const Eigen::VectorXcd& psi, core::Frame frame = core::Frame::interaction);

  double trace_deviation() const;
  double hermiticity_deviation() const;
  double min_eigenvalue() const;
  /// Throws InvariantViolation when Hermiticity, trace or positivity are off.
  void check(double herm_tol = 1e-10, double trace_tol = 1e-8, double eig_tol = 1e-7) const;
};

struct DensityTrajectory {
  std::vector<double> times;
  std::vector<Eigen::MatrixXcd> states;
  EvolutionReport report;

  const Eigen::MatrixXcd& final_state() const { return states.back(); }
};

/// d rho/dt = -i[H, rho] + sum_{j,k} (L rho L^+ - {L^+ L, rho}/2), L = sqrt(g_k)|k>_j<r|.
/// Needs the leak level when decay is active. A snapshot eigenvalue below -1e-6
/// raises IntegratorError; the density invariants are checked afterwards.
DensityTrajectory integrate_lindblad(const core::TimeDepHamiltonian& h, const DecayModel& decay,
                                     const DensityMatrix& rho0, double t0, double t1,
                                     std::span<const double> snapshot_times = {},
                                     const EvolutionOptions& options = {});

/// Images of |a><b| for all a, b in `subspace` at t1, indexed [a * m + b].
std::vector<Eigen::MatrixXcd> lindblad_channel(const core::TimeDepHamiltonian& h, const DecayModel& decay,
                                               std::span<const std::size_t> subspace, double t0, double t1,
                                               const EvolutionOptions& options = {});

}  // namespace ugsb::dynamics
