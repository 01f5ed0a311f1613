#include "ugsb/perturbation/numeric_validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ugsb/core/builders.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/perturbation/effective_model.hpp"

namespace ugsb::perturbation {
namespace {

struct LinearFit {
  double a, b, c, sse;
};

LinearFit fit_at(const std::vector<double>& t, const std::vector<double>& y, double w) {
  Eigen::MatrixXd A(static_cast<Eigen::Index>(t.size()), 3);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    A(r, 0) = 1.0;
    A(r, 1) = std::cos(w * t[i]);
    A(r, 2) = std::sin(w * t[i]);
    rhs(r) = y[i];
  }
  const Eigen::Vector3d x = A.colPivHouseholderQr().solve(rhs);
  return LinearFit{x(0), x(1), x(2), (A * x - rhs).squaredNorm()};
}

}  // namespace

SinusoidFit fit_sinusoid(const std::vector<double>& t, const std::vector<double>& y, double w_lo, double w_hi) {
  if (t.size() != y.size() || t.size() < 8) throw FitError("too few samples for a frequency fit");
  const std::size_t grid = 2000;
  double best_w = w_lo, best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= grid; ++i) {
    const double w = w_lo + (w_hi - w_lo) * static_cast<double>(i) / grid;
    const double sse = fit_at(t, y, w).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best_w = w;
    }
  }
  const double cell = (w_hi - w_lo) / grid;
  double lo = std::max(w_lo, best_w - cell), hi = std::min(w_hi, best_w + cell);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = fit_at(t, y, x1).sse, f2 = fit_at(t, y, x2).sse;
  for (int it = 0; it < 100 && hi - lo > 1e-12 * std::abs(hi); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = fit_at(t, y, x1).sse;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = fit_at(t, y, x2).sse;
    }
  }
  const double w = 0.5 * (lo + hi);
  const LinearFit f = fit_at(t, y, w);
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  double sst = 0.0;
  for (double v : y) sst += (v - mean) * (v - mean);
  SinusoidFit out;
  out.frequency = w;
  out.offset = f.a;
  out.amplitude = std::hypot(f.b, f.c);
  out.r_squared = sst > 0.0 ? 1.0 - f.sse / sst : 0.0;
  return out;
}

double phase_slope(const std::vector<double>& t, const std::vector<std::complex<double>>& z) {
  if (t.size() != z.size() || t.size() < 2) throw FitError("too few samples for a phase fit");
  std::vector<double> phase(z.size());
  double offset = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double p = std::arg(z[i]);
    if (i) {
      double d = p + offset - phase[i - 1];
      while (d > std::numbers::pi) {
        offset -= 2.0 * std::numbers::pi;
        d -= 2.0 * std::numbers::pi;
      }
      while (d < -std::numbers::pi) {
        offset += 2.0 * std::numbers::pi;
        d += 2.0 * std::numbers::pi;
      }
    }
    phase[i] = p + offset;
  }
  const double n = static_cast<double>(t.size());
  double st = 0, sp = 0, stt = 0, stp = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sp += phase[i];
    stt += t[i] * t[i];
    stp += t[i] * phase[i];
  }
  return (n * stp - st * sp) / (n * stt - st * st);
}

ValidationReport validate_against_numeric(const core::ParamSet& params, double tolerance,
                                          const dynamics::EvolutionOptions& options) {
  core::ParamSet p = params;
  p.control.reset();
  p.leak_level = false;
  p.doppler = {0.0, 0.0};
  p.drive.aux_mode = core::AuxMode::off;
  const EffectiveModel closed = effective_closed_form(p);
  // two-photon resonance of |01> with |rr>: delta = D01
  p.coupling = core::RydbergCoupling{(p.drive.delta1 - p.drive.delta0) + closed.d01 - closed.drr, {}, {}};
  derive_effective(p);

  const double rate = std::numbers::sqrt2 * std::abs(closed.omega_eff);
  // four effective Rabi periods; drive off needs no particular window
  const double window = rate > 0.0 ? 4.0 * 2.0 * std::numbers::pi / rate : 1.0;
  const std::size_t samples = 400;
  std::vector<double> times(samples);
  for (std::size_t i = 0; i < samples; ++i) times[i] = window * static_cast<double>(i + 1) / samples;

  const core::TimeDepHamiltonian h = core::build_interaction_hamiltonian(p);
  const auto& s = h.scheme();
  const std::size_t k00 = s.index_of_label("00"), k01 = s.index_of_label("01"), k10 = s.index_of_label("10"),
                    k11 = s.index_of_label("11"), krr = s.index_of_label("rr");
  const std::size_t sub[] = {k00, k01, k10, k11};
  const auto prop = dynamics::propagator(h, sub, 0.0, window, times, options);

  std::vector<double> prr(samples);
  std::vector<std::complex<double>> a00(samples), a11(samples), dark(samples);
  const auto e = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
  for (std::size_t i = 0; i < samples; ++i) {
    const Eigen::MatrixXcd& u = prop.snapshots[i];
    prr[i] = std::norm(u(e(krr), 1));
    a00[i] = u(e(k00), 0);
    a11[i] = u(e(k11), 3);
    dark[i] = 0.5 * (u(e(k01), 1) - u(e(k10), 1) - u(e(k01), 2) + u(e(k10), 2));
  }

  double omega_numeric = 0.0;
  if (rate > 0.0) {
    const SinusoidFit fit = fit_sinusoid(times, prr, 0.25 * rate, 4.0 * rate);
    if (fit.r_squared < 0.9 || fit.amplitude < 0.05) {
      throw FitError("no clean |rr> oscillation (R^2 = " + std::to_string(fit.r_squared) + ")");
    }
    omega_numeric = std::copysign(fit.frequency / std::numbers::sqrt2, closed.omega_eff);
  } else {
    const double peak = *std::max_element(prr.begin(), prr.end());
    if (peak > 0.05) throw FitError("|rr> population oscillates although the closed form predicts no coupling");
  }

  ValidationReport rep;
  rep.tolerance = tolerance;
  rep.v_used = p.coupling.v;
  rep.window = window;
  const auto add = [&](std::string name, double cf, double num) {
    const double err = cf != 0.0 ? std::abs(num - cf) / std::abs(cf) : std::abs(num - cf);
    rep.checks.push_back(NumericCheck{std::move(name), cf, num, err});
    rep.max_error = std::max(rep.max_error, err);
  };
  add("omega_eff", closed.omega_eff, omega_numeric);
  add("delta_00", closed.d00, -phase_slope(times, a00));
  add("delta_11", closed.d11, -phase_slope(times, a11));
  add("delta_01", closed.d01, -phase_slope(times, dark));
  rep.passed = rep.max_error <= tolerance;
  return rep;
}

}  // namespace ugsb::perturbation
