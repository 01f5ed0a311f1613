#pragma once

// Stroboscopic evolution for Hamiltonians whose coupling frequencies are all
// integer multiples of a common base: the one-period map is integrated once and
// raised to the required power, leaving only a partial period to integrate.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/core/hamiltonian.hpp"

namespace ugsb::dynamics {

struct PeriodInfo {
  double base_frequency = 0.0;
  double period = 0.0;
};

/// Largest base w such that every nonzero |w_k| is an integer multiple n_k w
/// within rel_tol, trying w = min|w_k| / q for q = 1..max_denominator.
/// Empty when there is no oscillating term or no such base.
std::optional<PeriodInfo> detect_period(const core::TimeDepHamiltonian& h, int max_denominator = 64,
                                        double rel_tol = 1e-12);

/// Copy with every frequency replaced by its exact multiple of the base.
core::TimeDepHamiltonian snap_to_period(const core::TimeDepHamiltonian& h, const PeriodInfo& info);

/// Applies integer powers of a fixed square matrix by binary decomposition,
/// caching the squarings.
class MatrixPowers {
 public:
  explicit MatrixPowers(Eigen::MatrixXcd base);

  /// M^k X
  Eigen::MatrixXcd apply(std::uint64_t k, const Eigen::MatrixXcd& x);
  /// M^k
  Eigen::MatrixXcd power(std::uint64_t k);

 private:
  const Eigen::MatrixXcd& pow2(std::size_t j);
  std::vector<Eigen::MatrixXcd> pow2_;
};

}  // namespace ugsb::dynamics
