#include "ugsb/core/params.hpp"

#include <cmath>
#include <string>

#include "ugsb/errors.hpp"
#include "ugsb/units.hpp"

namespace ugsb::core {

std::string_view to_string(AuxMode mode) {
  switch (mode) {
    case AuxMode::off: return "off";
    case AuxMode::ideal_compensation: return "ideal";
    case AuxMode::explicit_e: return "explicit";
  }
  return "?";
}

AuxMode aux_mode_from_string(std::string_view s) {
  if (s == "off") return AuxMode::off;
  if (s == "ideal") return AuxMode::ideal_compensation;
  if (s == "explicit") return AuxMode::explicit_e;
  throw ConfigurationError("unknown aux mode '" + std::string(s) + "'");
}

std::string_view to_string(CompensationScope scope) {
  return scope == CompensationScope::per_atom ? "per_atom" : "ground_products";
}

CompensationScope compensation_scope_from_string(std::string_view s) {
  if (s == "per_atom") return CompensationScope::per_atom;
  if (s == "ground_products") return CompensationScope::ground_products;
  throw ConfigurationError("unknown compensation scope '" + std::string(s) + "'");
}

AuxDrive DriveParams::matched_aux(double scale) const {
  if (!(scale > 0.0)) throw DomainError("aux scale must be positive");
  const double root = std::sqrt(scale);
  return AuxDrive{root * omega0, root * omega1, scale * delta0, scale * delta1};
}

RydbergCoupling RydbergCoupling::from_c6(double c6, double distance) {
  if (!(c6 > 0.0) || !(distance > 0.0)) throw DomainError("C6 and distance must be positive");
  return RydbergCoupling{c6 / std::pow(distance, 6), c6, distance};
}

RydbergCoupling RydbergCoupling::with_strength(double v, std::optional<double> c6) {
  RydbergCoupling c{v, c6, std::nullopt};
  if (c6) {
    if (!(*c6 > 0.0) || !(v > 0.0)) throw DomainError("C6 and V must be positive");
    c.distance = std::pow(*c6 / v, 1.0 / 6.0);
  }
  return c;
}

LevelScheme ParamSet::scheme() const {
  return LevelScheme(control ? 3 : 2, leak_level, drive.aux_mode == AuxMode::explicit_e);
}

void ParamSet::validate() const {
  const auto fail = [](const std::string& what) { throw ConfigurationError(what); };
  if (!(drive.delta0 > 0.0) || !(drive.delta1 > 0.0)) fail("detunings delta0, delta1 must be > 0");
  if (!std::isfinite(drive.omega0) || !std::isfinite(drive.omega1) || drive.omega0 < 0.0 ||
      drive.omega1 < 0.0) {
    fail("Rabi frequencies must be finite and >= 0");
  }
  if (drive.aux_mode == AuxMode::explicit_e) {
    const auto& a = drive.aux;
    if (!(a.delta0 > 0.0) || !(a.delta1 > 0.0)) fail("aux detunings must be > 0");
    const auto check = [&](double wa, double da, double w, double d, const char* leg) {
      const double lhs = wa * wa / da;
      const double rhs = w * w / d;
      const double scale = std::max(std::abs(lhs), std::abs(rhs));
      if (scale > 0.0 && std::abs(lhs - rhs) > 1e-12 * scale) {
        fail(std::string("aux leg ") + leg + " violates W'^2/D' = W^2/D");
      }
    };
    check(a.omega0, a.delta0, drive.omega0, drive.delta0, "0");
    check(a.omega1, a.delta1, drive.omega1, drive.delta1, "1");
  }
  if (coupling.c6 && coupling.distance) {
    const double expect = *coupling.c6 / std::pow(*coupling.distance, 6);
    if (!(coupling.v > 0.0) || std::abs(coupling.v - expect) > 1e-12 * std::abs(coupling.v)) {
      fail("V inconsistent with C6/d^6");
    }
  }
  if (control && !(control->omega_c > 0.0)) fail("control Rabi frequency must be > 0");
}

ParamSet reference_params() {
  ParamSet p;
  const double omega = units::from_mhz(10.0);
  p.drive.omega0 = omega;
  p.drive.omega1 = omega;
  p.drive.delta0 = 10.0 * omega;
  p.drive.delta1 = 30.0 * omega;
  p.drive.aux = p.drive.matched_aux();
  return p;
}

}  // namespace ugsb::core
