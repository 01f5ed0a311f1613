#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace ugsb::dynamics {

enum class Method { dop853, dp5 };

std::string_view to_string(Method m);

struct IntegratorOptions {
  Method method = Method::dop853;
  double rtol = 1e-9;
  double atol = 1e-12;
  /// 0 = no ceiling beyond the caller-supplied one.
  double max_step = 0.0;
  std::size_t max_steps = 200'000'000;
};

struct IntegratorStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evals = 0;
  double min_step = 0.0;
  double max_step = 0.0;

  IntegratorStats& operator+=(const IntegratorStats& o);
};

/// Embedded explicit Runge-Kutta integrator on a flat real vector.
///
/// Error control follows the usual mixed absolute/relative scale
/// atol + rtol * max(|y_old|, |y_new|). For DOP853 the error norm combines the
/// fifth- and third-order estimates; for DP5 it is the RMS of the 4th-order
/// embedded difference.
class AdaptiveStepper {
 public:
  /// dydt = f(t, y), both of length n.
  using Rhs = std::function<void(double t, const double* y, double* dydt)>;
  /// Called with the snapshot position, its time and the state there.
  using Observer = std::function<void(std::size_t index, double t, const double* y)>;

  AdaptiveStepper(std::size_t n, Rhs rhs, IntegratorOptions options);

  /// Integrates y in place from t0 to t1. Snapshot times must be sorted and lie
  /// in [t0, t1]; steps are clipped to land on each one exactly. `first_step`
  /// of 0 picks an initial step from the RHS scale.
  IntegratorStats integrate(double t0, double t1, std::span<double> y,
                            std::span<const double> snapshots = {}, const Observer& observer = {},
                            double first_step = 0.0);

  std::size_t size() const { return n_; }
  const IntegratorOptions& options() const { return options_; }

 private:
  double initial_step(double t0, const double* y, const double* f0, double span) const;

  std::size_t n_;
  Rhs rhs_;
  IntegratorOptions options_;
  std::vector<std::vector<double>> k_;
  std::vector<double> stage_, y_new_, err_a_, err_b_;
};

}  // namespace ugsb::dynamics
