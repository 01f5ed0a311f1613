#pragma once

#include <string>
#include <vector>

#include "ugsb/core/params.hpp"
#include "ugsb/dynamics/evolution.hpp"

namespace ugsb::perturbation {

struct NumericCheck {
  std::string quantity;
  double closed_form = 0.0;
  double numeric = 0.0;
  double error = 0.0;  // relative, or absolute when the closed form is zero
};

struct ValidationReport {
  std::vector<NumericCheck> checks;
  double tolerance = 0.0;
  double max_error = 0.0;
  bool passed = false;
  double v_used = 0.0;
  double window = 0.0;
};

/// Fits the |01> <-> |rr> oscillation and the phase drift of |00>, |11> and
/// (|01> - |10>)/sqrt(2) from the full interaction-picture evolution with the
/// Stark shifts left uncompensated and V tuned onto the two-photon resonance,
/// then compares with the closed forms. Throws FitError when the |rr>
/// population shows no clean oscillation.
ValidationReport validate_against_numeric(const core::ParamSet& params, double tolerance,
                                          const dynamics::EvolutionOptions& options = {});

struct SinusoidFit {
  double frequency = 0.0;  // rad/us
  double offset = 0.0;
  double amplitude = 0.0;
  double r_squared = 0.0;
};

/// Least-squares fit of a + b cos(w t) + c sin(w t), with w located on a
/// periodogram over [w_lo, w_hi] and refined by golden-section search.
SinusoidFit fit_sinusoid(const std::vector<double>& t, const std::vector<double>& y, double w_lo, double w_hi);

/// Slope of the unwrapped phase of z(t) by linear least squares.
double phase_slope(const std::vector<double>& t, const std::vector<std::complex<double>>& z);

}  // namespace ugsb::perturbation
