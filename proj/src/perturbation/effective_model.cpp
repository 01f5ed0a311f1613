#include "ugsb/perturbation/effective_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ugsb/core/builders.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/log.hpp"

namespace ugsb::perturbation {

using core::ParamSet;

double EffectiveModel::holonomic_time() const {
  if (omega_eff == 0.0) throw DegenerateGateError("effective Rabi frequency is zero");
  return std::numbers::sqrt2 * std::numbers::pi / std::abs(omega_eff);
}

EffectiveModel effective_closed_form(const ParamSet& params) {
  const auto& d = params.drive;
  const double w0 = d.omega0 * d.omega0;
  const double w1 = d.omega1 * d.omega1;
  const double D0 = d.delta0;
  const double D1 = d.delta1;

  EffectiveModel m;
  m.d00 = -w0 / (2.0 * D0);
  m.d01 = w1 / (4.0 * D1) - w0 / (4.0 * D0);
  m.d10 = m.d01;
  m.d11 = w1 / (2.0 * D1);
  m.drr = w0 / (2.0 * D1) - w1 / (2.0 * D0);
  m.dr0 = w0 / (4.0 * D0) - (w0 + w1) / (4.0 * D1);
  m.d0r = m.dr0;
  // |r1> reaches |11> and |rr> through the leg-1 field, so both carry W1
  m.dr1 = (w0 + w1) / (4.0 * D0) - w1 / (4.0 * D1);
  m.d1r = m.dr1;
  m.omega_eff = d.omega0 * d.omega1 / (2.0 * D1) - d.omega0 * d.omega1 / (2.0 * D0);
  m.v0 = params.coupling.v - (D1 - D0);
  m.delta = m.v0 + m.drr;
  if (m.delta != 0.0) m.omega_d = m.omega_eff * m.omega_eff / (2.0 * m.delta);
  m.compensated = d.aux_mode != core::AuxMode::off;

  if (!m.compensated) {
    m.matrix(e00, e00) = m.d00;
    m.matrix(e01, e01) = m.d01;
    m.matrix(e10, e10) = m.d10;
    m.matrix(e11, e11) = m.d11;
  }
  m.matrix(err, err) = m.delta;
  m.matrix(err, e01) = m.matrix(e01, err) = m.omega_eff / 2.0;
  m.matrix(err, e10) = m.matrix(e10, err) = m.omega_eff / 2.0;
  return m;
}

EffectiveModel derive_effective(const ParamSet& params) {
  params.validate();
  const auto& d = params.drive;
  const double omega = std::max(d.omega0, d.omega1);
  if (omega > 0.0) {
    const double gap_rr = std::abs(d.delta1 - params.coupling.v);
    const struct {
      const char* name;
      double ratio;
    } checks[] = {
        {"delta0/omega", d.delta0 / omega},
        {"delta1/omega", d.delta1 / omega},
        {"|delta1 - V|/omega", gap_rr / omega},
    };
    for (const auto& c : checks) {
      if (c.ratio <= 3.0) {
        throw PerturbationInvalidError(std::string(c.name) + " = " + std::to_string(c.ratio) +
                                       " is too small for second-order elimination");
      }
      if (c.ratio <= 5.0) log::warn(std::string(c.name) + " below 5, effective model is rough");
    }
    if (std::abs(d.delta1 - params.coupling.v + d.delta0) < omega) {
      throw PerturbationInvalidError("resonance collision: delta1 - V close to -delta0");
    }
  }
  EffectiveModel m = effective_closed_form(params);
  if (m.omega_eff == 0.0) log::warn("effective Rabi frequency vanishes (symmetric detunings)");
  return m;
}

double choose_v_for_delta(const ParamSet& params, double delta_target) {
  const EffectiveModel m = effective_closed_form(params);
  const double v = (params.drive.delta1 - params.drive.delta0) + delta_target - m.drr;
  ParamSet check = params;
  check.coupling = core::RydbergCoupling{v, params.coupling.c6, std::nullopt};
  derive_effective(check);
  return v;
}

ParamSet with_delta(const ParamSet& params, double delta_target) {
  ParamSet out = params;
  const double v = choose_v_for_delta(params, delta_target);
  out.coupling.v = v;
  out.coupling.distance.reset();
  if (out.coupling.c6 && v > 0.0) out.coupling.distance = core::distance_for_strength(*out.coupling.c6, v);
  return out;
}

DispersiveResult dispersive_rate(const EffectiveModel& model) {
  if (model.delta == 0.0) throw DomainError("dispersive rate undefined at delta = 0; use the holonomic gate");
  if (std::abs(model.delta) <= 1.5 * std::abs(model.omega_eff)) {
    throw PerturbationInvalidError("|delta| must exceed 3 |omega_eff|/2 for the dispersive regime");
  }
  DispersiveResult r;
  r.omega_d = model.omega_eff * model.omega_eff / (2.0 * model.delta);
  r.matrix.setConstant(-r.omega_d / 2.0);
  if (r.omega_d == 0.0) throw DegenerateGateError("dispersive rate is zero");
  r.gate_time = std::numbers::pi / std::abs(r.omega_d);
  return r;
}

}  // namespace ugsb::perturbation
