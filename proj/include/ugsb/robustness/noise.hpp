#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

namespace ugsb::robustness {

/// Thermal Doppler dephasing of the Rydberg transition.
struct DopplerSpec {
  double k_eff = 8.76e6;         // 1/m
  double temperature_uk = 0.0;   // uK
  double mass = 1.443e-25;       // kg, 87Rb
  double k_b = 1.380649e-23;     // J/K

  /// sigma = k_eff sqrt(k_B T / M), in rad/us.
  double sigma() const;
};

double doppler_sigma(double k_eff, double temperature_uk, double mass, double k_b = 1.380649e-23);

/// One-dimensional Gaussian jitter of the interatomic distance.
struct DistanceSpec {
  std::optional<double> mean_um;  // (C6 / V)^(1/6) of the gate when unset
  double sigma_um = 0.0;
};

struct NoiseSpec {
  DopplerSpec doppler;
  DistanceSpec distance;
  double tau = std::numeric_limits<double>::infinity();  // us
  std::size_t samples = 201;
  std::uint64_t seed = 20240611;
};

}  // namespace ugsb::robustness
