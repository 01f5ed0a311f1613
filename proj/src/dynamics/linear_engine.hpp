#pragma once

// Shared driver for linear ODEs dX/dt = L(t) X on flat complex blocks, with an
// optional stroboscopic path. Private to the dynamics sources.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/dynamics/evolution.hpp"
#include "ugsb/dynamics/periodic.hpp"

namespace ugsb::dynamics::detail {

using cplx = std::complex<double>;

struct LinearProblem {
  /// Complex entries of a single column (n for states, n^2 for density matrices).
  std::size_t column_size = 0;
  /// RHS on a flat block holding `batch` columns in the problem's own layout.
  std::function<void(double t, const cplx* x, cplx* dx, std::size_t batch)> rhs;
  /// Layout converters: flat block <-> column_size x batch matrix.
  std::function<Eigen::MatrixXcd(const std::vector<cplx>& flat, std::size_t batch)> to_columns;
  std::function<std::vector<cplx>(const Eigen::MatrixXcd& cols)> from_columns;
  /// Rough cost of one RHS evaluation per column, used to choose the path.
  double column_cost = 1.0;
  /// Invertible column set the one-period map is integrated on (identity when
  /// empty), for right-hand sides that are only valid on a subset such as
  /// Hermitian matrices.
  Eigen::MatrixXcd period_basis;
  double max_frequency = 0.0;
  double scale = 0.0;
};

/// Evolves `x0` (column_size x batch) and returns one column matrix per
/// snapshot time (t1 alone when none are given). `period` enables the
/// stroboscopic path; the caller passes the problem for the snapped Hamiltonian.
std::vector<Eigen::MatrixXcd> run_linear(const LinearProblem& problem, const Eigen::MatrixXcd& x0, double t0,
                                         double t1, std::span<const double> snapshots,
                                         const EvolutionOptions& options, const std::optional<PeriodInfo>& period,
                                         EvolutionReport& report);

}  // namespace ugsb::dynamics::detail
