#pragma once

// Internal unit system: angular frequencies in rad/us, times in us, distances in um.
// Configuration files and reports use nu/2pi in MHz.

#include <numbers>

namespace ugsb::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// nu/2pi [MHz] -> omega [rad/us]
constexpr double from_mhz(double mhz) { return kTwoPi * mhz; }

/// omega [rad/us] -> nu/2pi [MHz]
constexpr double to_mhz(double rad_per_us) { return rad_per_us / kTwoPi; }

constexpr double nm_to_um(double nm) { return nm * 1e-3; }

}  // namespace ugsb::units
