#pragma once

#include <Eigen/Dense>
#include <optional>

#include "ugsb/core/params.hpp"

namespace ugsb::perturbation {

using Matrix5 = Eigen::Matrix<std::complex<double>, 5, 5>;

/// Indices of the effective basis {|00>, |01>, |10>, |11>, |rr>}.
enum EffIndex : int { e00 = 0, e01 = 1, e10 = 2, e11 = 3, err = 4 };

/// Second-order effective dynamics of the driven pair (rad/us).
struct EffectiveModel {
  double d00 = 0, d01 = 0, d10 = 0, d11 = 0, drr = 0;
  // single-excitation shifts; reported, never placed in `matrix`
  double dr0 = 0, d0r = 0, dr1 = 0, d1r = 0;
  double omega_eff = 0;
  double v0 = 0;     // V - (D1 - D0)
  double delta = 0;  // V0 + Drr
  std::optional<double> omega_d;
  bool compensated = false;
  Matrix5 matrix = Matrix5::Zero();

  /// sqrt(2) pi / |W_eff|; throws DegenerateGateError when W_eff = 0.
  double holonomic_time() const;
};

/// Closed-form shifts and couplings. Requires D0, D1, |D1 - V| > 3 W (warning below 5)
/// and rejects the collision |D1 - V + D0| < W.
EffectiveModel derive_effective(const core::ParamSet& params);

/// Closed forms without any validity checks, for sweeps that record gaps themselves.
EffectiveModel effective_closed_form(const core::ParamSet& params);

/// V = (D1 - D0) + delta - Drr, validated with derive_effective at the returned V.
double choose_v_for_delta(const core::ParamSet& params, double delta_target);

/// Copy of params with coupling.v set by choose_v_for_delta (c6/distance kept consistent).
core::ParamSet with_delta(const core::ParamSet& params, double delta_target);

struct DispersiveResult {
  double omega_d = 0;
  /// -W_d |B><B| on {|01>, |10>}, |B> = (|01> + |10>)/sqrt(2)
  Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Zero();
  double gate_time = 0;  // pi / |W_d|
};

/// W_d = W_eff^2 / (2 delta). delta = 0 -> DomainError; |delta| <= 3 |W_eff|/2 ->
/// PerturbationInvalidError.
DispersiveResult dispersive_rate(const EffectiveModel& model);

}  // namespace ugsb::perturbation
