#include "ugsb/core/builders.hpp"

#include <algorithm>
#include <cmath>

#include "ugsb/errors.hpp"
#include "ugsb/log.hpp"

namespace ugsb::core {
namespace {

void check_scheme(const ParamSet& params, const LevelScheme& scheme) {
  const bool want_aux = params.drive.aux_mode == AuxMode::explicit_e;
  if (scheme.has_aux() != want_aux) {
    throw ConfigurationError("aux_e level present iff aux mode is explicit");
  }
  const std::size_t atoms = params.control ? 3 : 2;
  if (scheme.atom_count() != atoms) throw ConfigurationError("scheme atom count mismatch");
}

// Target drives, aux handling, V and Doppler on atoms (ta, tb).
void add_target_terms(TimeDepHamiltonian& h, const ParamSet& params, std::size_t ta, std::size_t tb) {
  const LevelScheme& s = h.scheme();
  const DriveParams& d = params.drive;
  const std::size_t atoms[2] = {ta, tb};

  for (std::size_t ket = 0; ket < s.dimension(); ++ket) {
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t atom = atoms[j];
      const Level lvl = s.level_of(ket, atom);
      if (lvl == Level::q0) {
        h.add_coupling(s.with_level(ket, atom, Level::ryd), ket, d.omega0 / 2.0, d.delta0);
      } else if (lvl == Level::q1) {
        h.add_coupling(s.with_level(ket, atom, Level::ryd), ket, d.omega1 / 2.0, -d.delta1);
      } else if (lvl == Level::ryd) {
        h.add_diagonal(ket, params.doppler[j]);
      }

      if (d.aux_mode == AuxMode::explicit_e && lvl == Level::aux_e) {
        h.add_coupling(s.with_level(ket, atom, Level::q0), ket, d.aux.omega0 / 2.0, d.aux.delta0);
        h.add_coupling(s.with_level(ket, atom, Level::q1), ket, d.aux.omega1 / 2.0, -d.aux.delta1);
      }
      if (d.aux_mode == AuxMode::ideal_compensation &&
          d.compensation_scope == CompensationScope::per_atom) {
        if (lvl == Level::q0) h.add_diagonal(ket, d.omega0 * d.omega0 / (4.0 * d.delta0));
        if (lvl == Level::q1) h.add_diagonal(ket, -d.omega1 * d.omega1 / (4.0 * d.delta1));
      }
    }

    const Level la = s.level_of(ket, ta);
    const Level lb = s.level_of(ket, tb);
    if (la == Level::ryd && lb == Level::ryd) h.add_diagonal(ket, params.coupling.v);

    if (d.aux_mode == AuxMode::ideal_compensation &&
        d.compensation_scope == CompensationScope::ground_products) {
      const auto is_q = [](Level l) { return l == Level::q0 || l == Level::q1; };
      if (is_q(la) && is_q(lb)) {
        const double w0 = d.omega0 * d.omega0;
        const double w1 = d.omega1 * d.omega1;
        const double d00 = -w0 / (2.0 * d.delta0);
        const double d01 = w1 / (4.0 * d.delta1) - w0 / (4.0 * d.delta0);
        const double d11 = w1 / (2.0 * d.delta1);
        const int ones = (la == Level::q1) + (lb == Level::q1);
        h.add_diagonal(ket, ones == 0 ? -d00 : ones == 1 ? -d01 : -d11);
      }
    }
  }
}

}  // namespace

TimeDepHamiltonian build_interaction_hamiltonian(const ParamSet& params) {
  if (params.control) {
    throw ConfigurationError("interaction Hamiltonian is two-atom; use build_fredkin_hamiltonian");
  }
  params.validate();
  TimeDepHamiltonian h(params.scheme(), Frame::interaction);
  check_scheme(params, h.scheme());
  add_target_terms(h, params, 0, 1);
  return h;
}

std::vector<double> pair_rydberg_projector(const ParamSet& params) {
  const LevelScheme s = params.scheme();
  const std::size_t ta = params.target_atom(0);
  const std::size_t tb = params.target_atom(1);
  std::vector<double> w(s.dimension(), 0.0);
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    if (s.level_of(k, ta) == Level::ryd && s.level_of(k, tb) == Level::ryd) w[k] = 1.0;
  }
  return w;
}

TimeDepHamiltonian build_rotated_hamiltonian(const ParamSet& params, Frame frame) {
  if (params.control) throw UnsupportedFrameError("rotated frames are defined for two atoms only");
  const TimeDepHamiltonian h = build_interaction_hamiltonian(params);
  const auto weights = pair_rydberg_projector(params);
  switch (frame) {
    case Frame::interaction: return h;
    case Frame::v_rotated: return h.rotated(params.coupling.v, weights, Frame::v_rotated);
    case Frame::v0_rotated:
      return h.rotated(params.drive.delta1 - params.drive.delta0, weights, Frame::v0_rotated);
  }
  throw UnsupportedFrameError("unknown frame");
}

TimeDepHamiltonian build_fredkin_hamiltonian(const ParamSet& params, FredkinStep step) {
  if (!params.control) throw ConfigurationError("Fredkin Hamiltonian needs a control block");
  params.validate();
  TimeDepHamiltonian h(params.scheme(), Frame::interaction);
  check_scheme(params, h.scheme());
  const LevelScheme& s = h.scheme();
  const ControlBlock& c = *params.control;

  if (step == FredkinStep::pulse) {
    for (std::size_t ket = 0; ket < s.dimension(); ++ket) {
      const Level lc = s.level_of(ket, 0);
      if (lc == Level::q0) h.add_coupling(ket, s.with_level(ket, 0, Level::ryd), c.omega_c / 2.0, 0.0);
      if (lc == Level::ryd && c.doppler_on_control) h.add_diagonal(ket, c.doppler_c);
    }
    return h;
  }

  add_target_terms(h, params, 1, 2);
  for (std::size_t ket = 0; ket < s.dimension(); ++ket) {
    if (s.level_of(ket, 0) != Level::ryd) continue;
    if (c.doppler_on_control) h.add_diagonal(ket, c.doppler_c);
    if (s.level_of(ket, 1) == Level::ryd) h.add_diagonal(ket, c.v1c);
    if (s.level_of(ket, 2) == Level::ryd) h.add_diagonal(ket, c.v2c);
  }
  return h;
}

double effective_rabi_from_two_photon(const TwoPhotonSpec& spec) {
  if (spec.delta_p == 0.0 || spec.delta_p == spec.delta) {
    throw DomainError("two-photon spec: intermediate detuning must differ from 0 and from delta");
  }
  const double inv = 1.0 / (spec.delta_p - spec.delta) + 1.0 / spec.delta_p;
  if (inv == 0.0) throw DomainError("two-photon spec: mean detuning diverges");
  const double dbar = 2.0 / inv;
  const double leg = std::max(std::abs(spec.omega_p), std::abs(spec.omega_r));
  if (leg > 0.0 && std::abs(spec.delta_p) / leg <= 5.0) {
    log::warn("two-photon ladder: intermediate detuning is not much larger than the leg Rabi frequencies");
  }
  return spec.omega_p * spec.omega_r / (2.0 * dbar);
}

double distance_for_strength(double c6, double v) {
  if (!(c6 > 0.0) || !(v > 0.0)) throw DomainError("C6 and V must be positive");
  return std::pow(c6 / v, 1.0 / 6.0);
}

double rri_strength(double c6, double distance) {
  if (!(c6 > 0.0) || !(distance > 0.0)) throw DomainError("C6 and distance must be positive");
  return c6 / std::pow(distance, 6);
}

}  // namespace ugsb::core
