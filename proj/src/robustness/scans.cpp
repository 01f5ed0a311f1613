#include "ugsb/robustness/scans.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>

#include "ugsb/core/builders.hpp"
#include "ugsb/core/param_io.hpp"
#include "ugsb/dynamics/sampler.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/gates/fidelity.hpp"
#include "ugsb/perturbation/effective_model.hpp"
#include "ugsb/units.hpp"

namespace ugsb::robustness {

using core::ParamSet;
using gates::GateKind;
using gates::GateSchedule;
using gates::NoiseOverride;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

unsigned workers_of(const ScanOptions& o) { return o.workers ? o.workers : dynamics::default_workers(); }

Eigen::VectorXcd embed(const core::LevelScheme& scheme, const Eigen::Vector4cd& psi0) {
  const std::array<std::complex<double>, 4> a{psi0(0), psi0(1), psi0(2), psi0(3)};
  return dynamics::QuantumState::computational(scheme, a).amplitudes;
}

SweepResult start(std::string name, const ParamSet& base, const nlohmann::json& extra = {}) {
  SweepResult r;
  r.name = std::move(name);
  r.params = {{"base", core::params_to_json(base)}};
  if (!extra.is_null()) r.params.update(extra);
  r.params_hash = config_hash(r.params);
  return r;
}

nlohmann::json state_json(const Eigen::Vector4cd& psi0) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) j.push_back({psi0(i).real(), psi0(i).imag()});
  return j;
}

}  // namespace

std::vector<double> Range::values() const {
  if (count == 0) throw ConfigurationError("range needs at least one point");
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return v;
}

SampleStats aggregate(std::span<const double> x) {
  if (x.empty()) throw ConfigurationError("cannot aggregate zero samples");
  const double x0 = x[0];
  double s = 0.0;
  for (double v : x) s += v - x0;
  const double shift = s / static_cast<double>(x.size());
  SampleStats st;
  st.mean = x0 + shift;
  double ss = 0.0;
  for (double v : x) ss += (v - x0 - shift) * (v - x0 - shift);
  st.standard_error = x.size() > 1 ? std::sqrt(ss / static_cast<double>(x.size() - 1) / static_cast<double>(x.size())) : 0.0;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  st.min = *lo;
  st.max = *hi;
  return st;
}

Eigen::Vector4cd plus_plus_state() { return Eigen::Vector4cd::Constant(0.5); }

Eigen::Vector4cd plus_one_state() {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(1) = v(3) = std::numbers::sqrt2 / 2.0;
  return v;
}

double swap_state_fidelity(const GateSchedule& schedule, const Eigen::Vector4cd& psi0, const NoiseOverride& noise,
                           const gates::RunOptions& run) {
  const gates::ScheduleRun r = gates::run_schedule(schedule, noise, run);
  const Eigen::VectorXcd full = embed(r.scheme, psi0);
  return gates::state_fidelity(r.state_at(r.columns.size() - 1, full),
                               gates::ideal_target(r.scheme, full, gates::ideal_swap()));
}

double swap_state_fidelity_lindblad(const GateSchedule& schedule, const Eigen::Vector4cd& psi0,
                                    const NoiseOverride& noise, const gates::RunOptions& run) {
  const core::LevelScheme scheme = gates::run_scheme(schedule, noise);
  const Eigen::VectorXcd full = embed(scheme, psi0);
  const auto traj = gates::run_schedule_lindblad(schedule, dynamics::DensityMatrix::pure(full), noise, run);
  return gates::state_fidelity(traj.final_state(), gates::ideal_target(scheme, full, gates::ideal_swap()));
}

SweepResult sweep_detunings(const ParamSet& base, const Range& delta0_ratio, const Range& delta1_ratio,
                            const ScanOptions& options) {
  SweepResult r = start("detunings", base);
  r.axes = {Axis{"delta0_over_omega", "1", delta0_ratio.values()}, Axis{"delta1_over_omega", "1", delta1_ratio.values()}};
  const std::size_t n = r.point_count();
  std::vector<double> fid(n, kNaN), logwt(n, kNaN), vw(n, kNaN), gt(n, kNaN);
  const double w = base.drive.omega0;
  const double aux_scale = base.drive.aux.delta0 > 0.0 && base.drive.delta0 > 0.0 ? base.drive.aux.delta0 / base.drive.delta0 : 1.0;
  dynamics::parallel_for(n, workers_of(options), [&](std::size_t p) {
    const auto c = r.coordinates(p);
    ParamSet q = base;
    q.drive.delta0 = r.axes[0].values[c[0]] * w;
    q.drive.delta1 = r.axes[1].values[c[1]] * w;
    q.drive.aux = q.drive.matched_aux(aux_scale);
    try {
      const GateSchedule s = gates::holonomic_swap_schedule(q);
      fid[p] = swap_state_fidelity(s, plus_plus_state(), {}, options.run);
      gt[p] = s.total_time();
      logwt[p] = std::log10(w * gt[p]);
      vw[p] = s.gate_params().coupling.v / w;
    } catch (const PerturbationInvalidError&) {
    } catch (const DomainError&) {
    } catch (const DegenerateGateError&) {
    }
  });
  r.add_field("fidelity", std::move(fid));
  r.add_field("log10_omega_T", std::move(logwt));
  r.add_field("v_over_omega", std::move(vw));
  r.add_field("gate_time_us", std::move(gt));
  r.validate();
  return r;
}

SweepResult sweep_delta(const ParamSet& base, std::span<const double> deltas, const Eigen::Vector4cd& psi0,
                        const ScanOptions& options) {
  SweepResult r = start("delta", base, {{"psi0", state_json(psi0)}});
  Axis ax{"delta_MHz", "MHz", {}};
  for (double d : deltas) ax.values.push_back(units::to_mhz(d));
  r.axes = {ax};
  const std::size_t n = deltas.size();
  std::vector<double> fid(n, kNaN), gt(n, kNaN), v(n, kNaN);
  dynamics::parallel_for(n, workers_of(options), [&](std::size_t p) {
    try {
      const GateSchedule s = gates::dynamical_swap_schedule(base, deltas[p]);
      fid[p] = swap_state_fidelity(s, psi0, {}, options.run);
      gt[p] = s.total_time();
      v[p] = units::to_mhz(s.gate_params().coupling.v);
    } catch (const PerturbationInvalidError&) {
    } catch (const DomainError&) {
    }
  });
  r.add_field("fidelity", std::move(fid));
  r.add_field("gate_time_us", std::move(gt));
  r.add_field("v_MHz", std::move(v));
  r.validate();
  return r;
}

SweepResult decay_scan(const ParamSet& base, GateKind kind, double delta, std::span<const double> taus,
                       const Eigen::Vector4cd& psi0, const ScanOptions& options) {
  SweepResult r = start("decay", base,
                        {{"gate", gates::to_string(kind)}, {"delta_MHz", units::to_mhz(delta)}, {"psi0", state_json(psi0)}});
  r.axes = {Axis{"tau_us", "us", std::vector<double>(taus.begin(), taus.end())}};
  const GateSchedule s = gates::swap_schedule(base, kind, delta);
  std::vector<double> fid(taus.size(), kNaN);
  dynamics::parallel_for(taus.size(), workers_of(options), [&](std::size_t p) {
    if (!(taus[p] > 0.0)) throw ConfigurationError("lifetime must be positive");
    NoiseOverride noise;
    if (std::isfinite(taus[p])) {
      noise.tau = taus[p];
      fid[p] = swap_state_fidelity_lindblad(s, psi0, noise, options.run);
    } else {
      fid[p] = swap_state_fidelity(s, psi0, noise, options.run);
    }
  });
  r.add_field("fidelity", std::move(fid));
  r.validate();
  return r;
}

SweepResult doppler_scan(const ParamSet& base, GateKind kind, double delta, std::span<const double> temperatures_uk,
                         const NoiseSpec& noise, const Eigen::Vector4cd& psi0, const ScanOptions& options) {
  if (noise.samples == 0) throw ConfigurationError("Doppler scan needs at least one sample");
  SweepResult r = start("doppler", base,
                        {{"gate", gates::to_string(kind)},
                         {"delta_MHz", units::to_mhz(delta)},
                         {"psi0", state_json(psi0)},
                         {"k_eff_per_m", noise.doppler.k_eff},
                         {"mass_kg", noise.doppler.mass}});
  r.seed = noise.seed;
  r.samples = noise.samples;
  r.axes = {Axis{"temperature_uK", "uK", std::vector<double>(temperatures_uk.begin(), temperatures_uk.end())}};
  const GateSchedule s = gates::swap_schedule(base, kind, delta);
  const std::size_t nt = temperatures_uk.size(), ns = noise.samples;
  std::vector<double> samples(nt * ns), sigmas(nt);
  std::vector<std::array<double, 2>> offsets(nt * ns);
  for (std::size_t k = 0; k < nt; ++k) {
    DopplerSpec d = noise.doppler;
    d.temperature_uk = temperatures_uk[k];
    sigmas[k] = d.sigma();
    for (std::size_t a = 0; a < 2; ++a) {
      const dynamics::GaussianSampler g{0.0, sigmas[k], ns, noise.seed, 2 * k + a};
      for (std::size_t i = 0; i < ns; ++i) offsets[k * ns + i][a] = g.draw(i);
    }
  }
  dynamics::parallel_for(nt * ns, workers_of(options), [&](std::size_t p) {
    NoiseOverride o;
    o.doppler = offsets[p];
    samples[p] = swap_state_fidelity(s, psi0, o, options.run);
  });
  std::vector<double> mean(nt), se(nt), lo(nt), sig(nt);
  for (std::size_t k = 0; k < nt; ++k) {
    const SampleStats st = aggregate(std::span<const double>(samples).subspan(k * ns, ns));
    mean[k] = st.mean;
    se[k] = st.standard_error;
    lo[k] = st.min;
    sig[k] = units::to_mhz(sigmas[k]);
  }
  r.add_field("fidelity", std::move(mean));
  r.add_field("standard_error", std::move(se));
  r.add_field("min_fidelity", std::move(lo));
  r.add_field("sigma_doppler_MHz", std::move(sig));
  r.validate();
  return r;
}

SweepResult distance_scan(const ParamSet& base, GateKind kind, double delta, std::span<const double> sigmas_um,
                          const NoiseSpec& noise, const Eigen::Vector4cd& psi0, const ScanOptions& options) {
  if (noise.samples == 0) throw ConfigurationError("distance scan needs at least one sample");
  if (!base.coupling.c6) throw ConfigurationError("distance scan needs C6");
  const GateSchedule s = gates::swap_schedule(base, kind, delta);
  const double c6 = *base.coupling.c6;
  const double mean_d = noise.distance.mean_um.value_or(core::distance_for_strength(c6, s.gate_params().coupling.v));
  SweepResult r = start("distance", base,
                        {{"gate", gates::to_string(kind)},
                         {"delta_MHz", units::to_mhz(delta)},
                         {"psi0", state_json(psi0)},
                         {"mean_distance_um", mean_d}});
  r.seed = noise.seed;
  r.samples = noise.samples;
  r.axes = {Axis{"sigma_d_um", "um", std::vector<double>(sigmas_um.begin(), sigmas_um.end())}};
  const std::size_t nk = sigmas_um.size(), ns = noise.samples;
  std::vector<double> v(nk * ns), samples(nk * ns);
  std::vector<double> redraws(nk, 0.0);
  for (std::size_t k = 0; k < nk; ++k) {
    if (sigmas_um[k] < 0.0) throw ConfigurationError("distance sigma must be >= 0");
    if (sigmas_um[k] == 0.0 && !noise.distance.mean_um) {
      std::fill_n(v.begin() + static_cast<std::ptrdiff_t>(k * ns), ns, kNaN);
      continue;
    }
    const dynamics::GaussianSampler g{mean_d, sigmas_um[k], ns, noise.seed, k};
    for (std::size_t i = 0; i < ns; ++i) {
      std::uint32_t attempt = 0;
      double d = g.draw(i, attempt);
      while (!(d > 0.0)) {
        if (++attempt > 1000) throw DomainError("distance sampling keeps producing d <= 0");
        d = g.draw(i, attempt);
      }
      redraws[k] += attempt;
      v[k * ns + i] = c6 / std::pow(d, 6);
    }
  }
  dynamics::parallel_for(nk * ns, workers_of(options), [&](std::size_t p) {
    NoiseOverride o;
    if (!std::isnan(v[p])) o.v = v[p];
    samples[p] = swap_state_fidelity(s, psi0, o, options.run);
  });
  std::vector<double> mean(nk), se(nk), lo(nk);
  for (std::size_t k = 0; k < nk; ++k) {
    const SampleStats st = aggregate(std::span<const double>(samples).subspan(k * ns, ns));
    mean[k] = st.mean;
    se[k] = st.standard_error;
    lo[k] = st.min;
  }
  r.add_field("fidelity", std::move(mean));
  r.add_field("standard_error", std::move(se));
  r.add_field("min_fidelity", std::move(lo));
  r.add_field("redraws", std::move(redraws));
  r.validate();
  return r;
}

}  // namespace ugsb::robustness
