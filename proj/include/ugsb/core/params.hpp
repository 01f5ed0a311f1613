#pragma once

// Physical parameters of a scenario. All frequencies are angular (rad/us),
// times in us, distances in um. Detunings are stored positive; the sign of
// each leg is carried by the Hamiltonian builders.

#include <array>
#include <optional>
#include <string_view>

#include "ugsb/core/level_scheme.hpp"

namespace ugsb::core {

enum class AuxMode { off, ideal_compensation, explicit_e };

/// Which states receive the static counter-shift in ideal-compensation mode.
/// per_atom: sum_j (W0^2/4D0)|0><0|_j - (W1^2/4D1)|1><1|_j, which also fixes
/// the single-excitation kets. ground_products: only |00>,|01>,|10>,|11>.
enum class CompensationScope { per_atom, ground_products };

std::string_view to_string(AuxMode mode);
AuxMode aux_mode_from_string(std::string_view s);
std::string_view to_string(CompensationScope scope);
CompensationScope compensation_scope_from_string(std::string_view s);

/// Off-resonant fields coupling |0>,|1> to the auxiliary level |e>.
struct AuxDrive {
  double omega0 = 0.0;
  double omega1 = 0.0;
  double delta0 = 0.0;
  double delta1 = 0.0;
};

struct DriveParams {
  double omega0 = 0.0;
  double omega1 = 0.0;
  double delta0 = 0.0;
  double delta1 = 0.0;
  AuxMode aux_mode = AuxMode::ideal_compensation;
  CompensationScope compensation_scope = CompensationScope::per_atom;
  AuxDrive aux;

  /// Aux fields with D'_k = s*D_k and W'_k = sqrt(s)*W_k, so W'^2/D' = W^2/D.
  AuxDrive matched_aux(double scale = 1.0) const;
};

struct RydbergCoupling {
  double v = 0.0;
  std::optional<double> c6;
  std::optional<double> distance;

  static RydbergCoupling from_c6(double c6, double distance);
  static RydbergCoupling with_strength(double v, std::optional<double> c6 = std::nullopt);
};

/// One leg k of a two-photon ladder |k> -> |p> -> |r>.
struct TwoPhotonSpec {
  double omega_p = 0.0;  // lower leg
  double omega_r = 0.0;  // upper leg
  double delta_p = 0.0;  // intermediate detuning
  double delta = 0.0;    // two-photon detuning
};

/// Control atom of a Fredkin register.
struct ControlBlock {
  double omega_c = 0.0;
  double v1c = 0.0;
  double v2c = 0.0;
  bool doppler_on_control = false;
  double doppler_c = 0.0;
};

struct ParamSet {
  DriveParams drive;
  RydbergCoupling coupling;
  std::array<double, 2> doppler{0.0, 0.0};
  std::optional<ControlBlock> control;
  bool leak_level = false;

  /// Basis implied by the parameters: 2 or 3 atoms (control first), |2> when
  /// leak_level is set, |e> in explicit-e mode.
  LevelScheme scheme() const;
  std::size_t target_atom(std::size_t which) const { return control ? which + 1 : which; }

  /// Throws ConfigurationError on violated invariants.
  void validate() const;
};

/// Parameter point used throughout the tests and presets:
/// W/2pi = 10 MHz, D0 = 10 W, D1 = 30 W, V unset.
ParamSet reference_params();

}  // namespace ugsb::core
