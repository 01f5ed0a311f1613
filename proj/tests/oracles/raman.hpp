#pragma once

// Three-level Raman exchange |01> <-> |rr> <-> |10>, couplings W/2 on both legs
// and detuning d on |rr>. Only the bright state (|01> + |10>)/sqrt2 moves; it
// couples to |rr> with g = W/sqrt2.

#include <cmath>

namespace oracle {

struct RamanPopulations {
  double p01, p10, prr;
};

inline RamanPopulations raman_from_01(double omega_eff, double detuning, double t) {
  const double g = std::abs(omega_eff) / std::sqrt(2.0);
  const double w = std::sqrt(g * g + detuning * detuning / 4.0);
  // bright amplitude: e^{-i d t/2} (cos wt + i (d/2w) sin wt); |rr> amplitude: -i (g/w) sin wt e^{-i d t/2}
  const double c = std::cos(w * t), s = std::sin(w * t);
  const double br = c, bi = detuning / (2.0 * w) * s;
  // global phase e^{-i d t/2} on the bright branch; the dark branch stays at 1
  const double ph = -detuning * t / 2.0;
  const double bre = br * std::cos(ph) - bi * std::sin(ph);
  const double bim = br * std::sin(ph) + bi * std::cos(ph);
  const double p01 = ((bre + 1.0) * (bre + 1.0) + bim * bim) / 4.0;
  const double p10 = ((bre - 1.0) * (bre - 1.0) + bim * bim) / 4.0;
  return {p01, p10, (g * g / (w * w)) * s * s / 2.0};
}

}  // namespace oracle
