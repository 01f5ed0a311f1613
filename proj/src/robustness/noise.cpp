#include "ugsb/robustness/noise.hpp"

#include <cmath>

#include "ugsb/errors.hpp"

namespace ugsb::robustness {

double doppler_sigma(double k_eff, double temperature_uk, double mass, double k_b) {
  if (temperature_uk < 0.0 || !(mass > 0.0) || k_eff < 0.0) {
    throw ConfigurationError("Doppler noise needs T >= 0, M > 0 and k_eff >= 0");
  }
  const double v_rms = std::sqrt(k_b * temperature_uk * 1e-6 / mass);  // m/s
  return k_eff * v_rms * 1e-6;
}

double DopplerSpec::sigma() const { return doppler_sigma(k_eff, temperature_uk, mass, k_b); }

}  // namespace ugsb::robustness
