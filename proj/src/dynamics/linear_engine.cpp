#include "linear_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "ugsb/errors.hpp"

namespace ugsb::dynamics {

double step_ceiling(double max_frequency) {
  return max_frequency > 0.0 ? 2.0 * std::numbers::pi / (20.0 * max_frequency) : 0.0;
}

namespace detail {
namespace {

IntegratorOptions capped(IntegratorOptions opts, double ceiling) {
  if (ceiling > 0.0) opts.max_step = opts.max_step > 0.0 ? std::min(opts.max_step, ceiling) : ceiling;
  return opts;
}

// Integrates a flat block from ta to tb, collecting the block at each snapshot.
void integrate_flat(const LinearProblem& p, std::vector<cplx>& flat, std::size_t batch, double ta, double tb,
                    std::span<const double> snaps, const IntegratorOptions& opts,
                    std::vector<std::vector<cplx>>* out, IntegratorStats& stats) {
  const std::size_t n = flat.size();
  AdaptiveStepper stepper(
      2 * n,
      [&](double t, const double* y, double* dy) {
        p.rhs(t, reinterpret_cast<const cplx*>(y), reinterpret_cast<cplx*>(dy), batch);
      },
      capped(opts, step_ceiling(p.max_frequency)));
  auto* data = reinterpret_cast<double*>(flat.data());
  AdaptiveStepper::Observer obs;
  if (out) {
    obs = [&](std::size_t, double, const double* y) {
      const auto* c = reinterpret_cast<const cplx*>(y);
      out->emplace_back(c, c + n);
    };
  }
  stats += stepper.integrate(ta, tb, std::span<double>(data, 2 * n), snaps, obs);
}

}  // namespace

std::vector<Eigen::MatrixXcd> run_linear(const LinearProblem& p, const Eigen::MatrixXcd& x0, double t0,
                                         double t1, std::span<const double> snapshots,
                                         const EvolutionOptions& options, const std::optional<PeriodInfo>& period,
                                         EvolutionReport& report) {
  if (static_cast<std::size_t>(x0.rows()) != p.column_size) throw ConfigurationError("initial block has wrong size");
  std::vector<double> times(snapshots.begin(), snapshots.end());
  if (times.empty()) times.push_back(t1);
  if (!std::is_sorted(times.begin(), times.end()) || times.front() < t0 || times.back() > t1) {
    throw ConfigurationError("snapshot times must be sorted and inside [t0, t1]");
  }
  const std::size_t batch = static_cast<std::size_t>(x0.cols());
  const double span = t1 - t0;

  bool use_period = false;
  if (period && options.acceleration != Acceleration::off && span > 2.0 * period->period) {
    if (options.acceleration == Acceleration::periodic) {
      use_period = true;
    } else {
      const double d = static_cast<double>(p.column_size);
      const double m = static_cast<double>(batch);
      const double step_rate = std::max(p.max_frequency, p.scale) * 20.0 / (2.0 * std::numbers::pi);
      const double per_step = 13.0 * p.column_cost;
      const double direct = span * step_rate * per_step * m;
      const double k = span / period->period;
      const double groups = static_cast<double>(times.size());
      const double periodic = period->period * step_rate * per_step * (d + groups * m) +
                              std::log2(k + 1.0) * (d * d * d + groups * d * d * m);
      use_period = periodic < 0.5 * direct;
    }
  }

  std::vector<Eigen::MatrixXcd> result;
  result.reserve(times.size());

  if (!use_period) {
    std::vector<cplx> flat = p.from_columns(x0);
    std::vector<std::vector<cplx>> snaps;
    integrate_flat(p, flat, batch, t0, t1, times, options.integrator, &snaps, report.stats);
    for (const auto& s : snaps) result.push_back(p.to_columns(s, batch));
    report.periodic = false;
    return result;
  }

  const double P = period->period;
  IntegratorOptions tight = options.integrator;
  tight.rtol = std::min(tight.rtol, options.period_rtol);
  tight.atol = std::min(tight.atol, options.period_atol);

  const std::size_t d = p.column_size;
  const auto di = static_cast<Eigen::Index>(d);
  const Eigen::MatrixXcd basis = p.period_basis.size() ? p.period_basis : Eigen::MatrixXcd::Identity(di, di);
  std::vector<cplx> flat0 = p.from_columns(basis);
  integrate_flat(p, flat0, d, t0, t0 + P, {}, tight, nullptr, report.stats);
  Eigen::MatrixXcd map = p.to_columns(flat0, d);
  if (p.period_basis.size()) map = basis.transpose().partialPivLu().solve(map.transpose()).transpose();
  MatrixPowers powers(map);

  // group snapshots by whole periods elapsed
  std::map<std::uint64_t, std::vector<std::pair<double, std::size_t>>> groups;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double rel = (times[i] - t0) / P;
    auto k = static_cast<std::uint64_t>(std::floor(rel));
    double r = times[i] - t0 - static_cast<double>(k) * P;
    if (r >= P * (1.0 - 1e-12)) {
      ++k;
      r = 0.0;
    }
    if (r < 0.0) r = 0.0;
    groups[k].emplace_back(r, i);
  }

  result.assign(times.size(), Eigen::MatrixXcd());
  std::uint64_t k_cur = 0;
  Eigen::MatrixXcd x_cur = x0;
  for (auto& [k, items] : groups) {
    x_cur = powers.apply(k - k_cur, x_cur);
    k_cur = k;
    std::sort(items.begin(), items.end());
    std::vector<double> rs;
    for (const auto& [r, idx] : items) rs.push_back(t0 + r);
    std::vector<cplx> flat = p.from_columns(x_cur);
    std::vector<std::vector<cplx>> snaps;
    integrate_flat(p, flat, batch, t0, rs.back(), rs, options.integrator, &snaps, report.stats);
    for (std::size_t j = 0; j < items.size(); ++j) result[items[j].second] = p.to_columns(snaps[j], batch);
  }
  report.periodic = true;
  report.period = P;
  report.periods = k_cur;
  return result;
}

}  // namespace detail
}  // namespace ugsb::dynamics
