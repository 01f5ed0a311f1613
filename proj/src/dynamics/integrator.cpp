#include "ugsb/dynamics/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "ugsb/dynamics/dop853_tableau.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/kernels/kernels.hpp"

namespace ugsb::dynamics {
namespace {

namespace dp5 {
constexpr int kStages = 6;
constexpr std::array<double, 6> c = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0};
constexpr std::array<std::array<double, 6>, 6> a = {{
    {{0, 0, 0, 0, 0, 0}},
    {{1.0 / 5, 0, 0, 0, 0, 0}},
    {{3.0 / 40, 9.0 / 40, 0, 0, 0, 0}},
    {{44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, 0}},
    {{19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0, 0}},
    {{9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656, 0}},
}};
constexpr std::array<double, 6> b = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84};
constexpr std::array<double, 7> e = {-71.0 / 57600, 0,           71.0 / 16695, -71.0 / 1920,
                                     17253.0 / 339200, -22.0 / 525, 1.0 / 40};
}  // namespace dp5

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;

}  // namespace

std::string_view to_string(Method m) { return m == Method::dop853 ? "dop853" : "dp5"; }

IntegratorStats& IntegratorStats::operator+=(const IntegratorStats& o) {
  accepted += o.accepted;
  rejected += o.rejected;
  rhs_evals += o.rhs_evals;
  if (o.accepted) {
    min_step = accepted == o.accepted ? o.min_step : std::min(min_step, o.min_step);
    max_step = std::max(max_step, o.max_step);
  }
  return *this;
}

AdaptiveStepper::AdaptiveStepper(std::size_t n, Rhs rhs, IntegratorOptions options)
    : n_(n), rhs_(std::move(rhs)), options_(options) {
  if (!(options_.rtol > 0.0) || !(options_.atol > 0.0)) {
    throw ConfigurationError("integrator tolerances must be positive");
  }
  const std::size_t stages = options_.method == Method::dop853 ? dop853::kStages + 1 : dp5::kStages + 1;
  k_.assign(stages, std::vector<double>(n_, 0.0));
  stage_.assign(n_, 0.0);
  y_new_.assign(n_, 0.0);
  err_a_.assign(n_, 0.0);
  err_b_.assign(n_, 0.0);
}

double AdaptiveStepper::initial_step(double t0, const double* y, const double* f0, double span) const {
  // Two-evaluation estimate (Hairer, Norsett & Wanner II.4).
  const auto& kt = kernels::active_kernels();
  const int order = options_.method == Method::dop853 ? 7 : 4;
  const double d0 = std::sqrt(kt.scaled_sq_norms(y, nullptr, y, y, options_.atol, options_.rtol, n_).first / n_);
  const double d1 = std::sqrt(kt.scaled_sq_norms(f0, nullptr, y, y, options_.atol, options_.rtol, n_).first / n_);
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min(h0, span);
  std::vector<double> y1(n_), f1(n_);
  for (std::size_t i = 0; i < n_; ++i) y1[i] = y[i] + h0 * f0[i];
  rhs_(t0 + h0, y1.data(), f1.data());
  for (std::size_t i = 0; i < n_; ++i) f1[i] -= f0[i];
  const double d2 =
      std::sqrt(kt.scaled_sq_norms(f1.data(), nullptr, y, y, options_.atol, options_.rtol, n_).first / n_) / h0;
  const double h1 = (d1 <= 1e-15 && d2 <= 1e-15) ? std::max(1e-6, h0 * 1e-3)
                                                  : std::pow(0.01 / std::max(d1, d2), 1.0 / (order + 1));
  return std::min(100.0 * h0, h1);
}

IntegratorStats AdaptiveStepper::integrate(double t0, double t1, std::span<double> y,
                                           std::span<const double> snapshots, const Observer& observer,
                                           double first_step) {
  if (y.size() != n_) throw ConfigurationError("state size does not match integrator");
  if (t1 < t0) throw ConfigurationError("integration end precedes start");
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    if (snapshots[i] < t0 || snapshots[i] > t1 || (i && snapshots[i] < snapshots[i - 1])) {
      throw ConfigurationError("snapshot times must be sorted and inside the integration span");
    }
  }

  IntegratorStats stats;
  const auto& kt = kernels::active_kernels();
  const bool high = options_.method == Method::dop853;
  const int stages = high ? dop853::kStages : dp5::kStages;
  const double exponent = high ? -1.0 / 8.0 : -1.0 / 5.0;
  const double h_cap = options_.max_step > 0.0 ? options_.max_step : std::numeric_limits<double>::infinity();

  std::size_t next_snap = 0;
  double t = t0;
  while (next_snap < snapshots.size() && snapshots[next_snap] <= t) {
    if (observer) observer(next_snap, t, y.data());
    ++next_snap;
  }
  if (t1 == t0) return stats;

  std::vector<const double*> vecs(k_.size());
  for (std::size_t j = 0; j < k_.size(); ++j) vecs[j] = k_[j].data();

  rhs_(t, y.data(), k_[0].data());
  ++stats.rhs_evals;
  double h = first_step > 0.0 ? first_step : initial_step(t, y.data(), k_[0].data(), t1 - t0);
  h = std::min(h, h_cap);
  stats.min_step = std::numeric_limits<double>::infinity();

  std::array<double, 13> coefs{};
  bool rejected_last = false;
  while (t < t1) {
    if (stats.accepted + stats.rejected >= options_.max_steps) {
      std::ostringstream msg;
      msg << "integrator exceeded " << options_.max_steps << " steps at t=" << t;
      throw IntegratorError(msg.str());
    }
    const double stop = next_snap < snapshots.size() ? snapshots[next_snap] : t1;
    const double min_h = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
    if (h < min_h) {
      std::ostringstream msg;
      msg << "step size underflow at t=" << t << " (h=" << h << ", accepted=" << stats.accepted
          << ", rejected=" << stats.rejected << ")";
      throw IntegratorError(msg.str());
    }
    bool clipped = false;
    double step = h;
    if (t + step >= stop - min_h) {
      step = stop - t;
      clipped = true;
    }

    for (int s = 1; s < stages; ++s) {
      const double cs = high ? dop853::c[s] : dp5::c[s];
      for (int j = 0; j < s; ++j) coefs[j] = high ? dop853::a[s][j] : dp5::a[s][j];
      kt.lincomb(stage_.data(), y.data(), step, coefs.data(), vecs.data(), s, n_);
      rhs_(t + cs * step, stage_.data(), k_[s].data());
    }
    for (int j = 0; j < stages; ++j) coefs[j] = high ? dop853::b[j] : dp5::b[j];
    kt.lincomb(y_new_.data(), y.data(), step, coefs.data(), vecs.data(), stages, n_);
    const double t_new = clipped ? stop : t + step;
    rhs_(t_new, y_new_.data(), k_[stages].data());
    stats.rhs_evals += stages;

    double err_norm = 0.0;
    if (high) {
      kt.lincomb(err_a_.data(), nullptr, 1.0, dop853::e5.data(), vecs.data(), stages + 1, n_);
      kt.lincomb(err_b_.data(), nullptr, 1.0, dop853::e3.data(), vecs.data(), stages + 1, n_);
      const auto s = kt.scaled_sq_norms(err_a_.data(), err_b_.data(), y.data(), y_new_.data(),
                                        options_.atol, options_.rtol, n_);
      const double denom = s.first + 0.01 * s.second;
      err_norm = denom > 0.0 ? std::abs(step) * s.first / std::sqrt(denom * static_cast<double>(n_)) : 0.0;
    } else {
      kt.lincomb(err_a_.data(), nullptr, step, dp5::e.data(), vecs.data(), stages + 1, n_);
      const auto s = kt.scaled_sq_norms(err_a_.data(), nullptr, y.data(), y_new_.data(), options_.atol,
                                        options_.rtol, n_);
      err_norm = std::sqrt(s.first / static_cast<double>(n_));
    }

    if (err_norm < 1.0) {
      double factor = err_norm == 0.0 ? kMaxFactor : std::min(kMaxFactor, kSafety * std::pow(err_norm, exponent));
      if (rejected_last) factor = std::min(1.0, factor);
      std::copy(y_new_.begin(), y_new_.end(), y.begin());
      std::swap(k_[0], k_[stages]);
      vecs[0] = k_[0].data();
      vecs[stages] = k_[stages].data();
      t = t_new;
      ++stats.accepted;
      stats.min_step = std::min(stats.min_step, step);
      stats.max_step = std::max(stats.max_step, step);
      rejected_last = false;
      // a clipped step keeps the previous proposal
      if (!clipped) h = std::min(h_cap, step * factor);
      while (next_snap < snapshots.size() && snapshots[next_snap] <= t) {
        if (observer) observer(next_snap, t, y.data());
        ++next_snap;
      }
    } else {
      h = step * std::max(kMinFactor, kSafety * std::pow(err_norm, exponent));
      ++stats.rejected;
      rejected_last = true;
    }
  }
  if (stats.accepted == 0) stats.min_step = 0.0;
  return stats;
}

}  // namespace ugsb::dynamics
