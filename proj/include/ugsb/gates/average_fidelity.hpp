#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/gates/fidelity.hpp"
#include "ugsb/kernels/kernels.hpp"

namespace ugsb::gates {

/// Two-qubit input states on a product grid of six angles b_j = 2 pi j / N,
/// j = 1..N:
///   (sin b1, cos b1 sin b2 e^{i b4}, cos b1 cos b2 sin b3 e^{i b5}, cos b1 cos b2 cos b3 e^{i b6})
class InitialStateGrid {
 public:
  explicit InitialStateGrid(int n);

  int resolution() const { return n_; }
  double angle(int j) const;  // j in 0..N-1 maps to 2 pi (j + 1) / N
  Eigen::Vector4cd state(const std::array<int, 6>& idx) const;
  std::size_t size() const;

 private:
  int n_;
};

/// Mean of |<psi|M|psi>|^2 over the grid with M = U_ideal^+ U_actual (4x4),
/// through the exact fourth moments of the grid.
double average_fidelity(const Eigen::MatrixXcd& actual, const IdealGate& ideal, const InitialStateGrid& grid);

/// Same mean by visiting all N^6 states; the innermost angle runs through the
/// given kernel table.
double average_fidelity_bruteforce(const Eigen::MatrixXcd& actual, const IdealGate& ideal,
                                   const InitialStateGrid& grid,
                                   const kernels::KernelTable& table = kernels::active_kernels());

/// F(t) for each restricted snapshot, reusing the grid moments.
std::vector<double> average_fidelity_series(const std::vector<Eigen::MatrixXcd>& restricted_snapshots,
                                            const IdealGate& ideal, const InitialStateGrid& grid);

}  // namespace ugsb::gates
