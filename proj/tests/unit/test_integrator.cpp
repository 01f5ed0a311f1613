#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ugsb/dynamics/integrator.hpp"
#include "ugsb/errors.hpp"

using namespace ugsb::dynamics;

namespace {

// y'' = -w^2 y as a first-order system
AdaptiveStepper oscillator(double w, IntegratorOptions o) {
  return AdaptiveStepper(2, [w](double, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = -w * w * y[0];
  }, o);
}

}  // namespace

class IntegratorMethods : public ::testing::TestWithParam<Method> {};

TEST_P(IntegratorMethods, HarmonicOscillatorToTolerance) {
  IntegratorOptions o;
  o.method = GetParam();
  o.rtol = 1e-10;
  o.atol = 1e-12;
  auto s = oscillator(3.0, o);
  std::vector<double> y{1.0, 0.0};
  const auto stats = s.integrate(0.0, 10.0, y);
  EXPECT_NEAR(y[0], std::cos(30.0), 1e-7);
  EXPECT_NEAR(y[1], -3.0 * std::sin(30.0), 3e-7);
  EXPECT_GT(stats.accepted, 0u);
  EXPECT_GT(stats.rhs_evals, stats.accepted);
}

INSTANTIATE_TEST_SUITE_P(Both, IntegratorMethods, ::testing::Values(Method::dop853, Method::dp5));

TEST(Integrator, Dop853NeedsFewerStepsThanDp5) {
  IntegratorOptions o;
  o.rtol = 1e-10;
  o.atol = 1e-12;
  std::vector<double> y1{1.0, 0.0}, y2{1.0, 0.0};
  auto a = oscillator(2.0, o);
  o.method = Method::dp5;
  auto b = oscillator(2.0, o);
  EXPECT_LT(a.integrate(0.0, 20.0, y1).accepted, b.integrate(0.0, 20.0, y2).accepted);
}

TEST(Integrator, SnapshotsLandExactly) {
  IntegratorOptions o;
  auto s = AdaptiveStepper(1, [](double, const double* y, double* dy) { dy[0] = -y[0]; }, o);
  std::vector<double> y{1.0};
  const std::vector<double> snaps{0.0, 0.1, 0.25, 1.0, 2.0};
  std::vector<double> seen_t, seen_y;
  s.integrate(0.0, 2.0, y, snaps, [&](std::size_t, double t, const double* v) {
    seen_t.push_back(t);
    seen_y.push_back(v[0]);
  });
  ASSERT_EQ(seen_t.size(), snaps.size());
  for (std::size_t k = 0; k < snaps.size(); ++k) {
    EXPECT_EQ(seen_t[k], snaps[k]);
    EXPECT_NEAR(seen_y[k], std::exp(-snaps[k]), 1e-9);
  }
}

TEST(Integrator, MaxStepIsHonoured) {
  IntegratorOptions o;
  o.max_step = 0.01;
  auto s = AdaptiveStepper(1, [](double, const double*, double* dy) { dy[0] = 1.0; }, o);
  std::vector<double> y{0.0};
  const auto st = s.integrate(0.0, 1.0, y);
  EXPECT_LE(st.max_step, 0.01 + 1e-15);
  EXPECT_GE(st.accepted, 100u);
  EXPECT_NEAR(y[0], 1.0, 1e-12);
}

TEST(Integrator, FailsLoudlyOnBlowUp) {
  IntegratorOptions o;
  o.max_steps = 1000;
  auto s = AdaptiveStepper(1, [](double, const double* y, double* dy) { dy[0] = y[0] * y[0]; }, o);
  std::vector<double> y{1.0};
  EXPECT_THROW(s.integrate(0.0, 2.0, y), ugsb::IntegratorError);
}

TEST(Integrator, RejectsUnsortedSnapshots) {
  auto s = AdaptiveStepper(1, [](double, const double*, double* dy) { dy[0] = 0.0; }, {});
  std::vector<double> y{0.0};
  const std::vector<double> snaps{0.5, 0.2};
  EXPECT_THROW(s.integrate(0.0, 1.0, y, snaps), ugsb::ConfigurationError);
}
