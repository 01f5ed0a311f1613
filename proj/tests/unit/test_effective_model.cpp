#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles/james.hpp"
#include "ugsb/core/builders.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/log.hpp"
#include "ugsb/perturbation/effective_model.hpp"
#include "ugsb/perturbation/numeric_validation.hpp"
#include "ugsb/units.hpp"

using namespace ugsb;
using perturbation::EffectiveModel;

namespace {

core::ParamSet point(double d0_ratio, double d1_ratio, double w1_scale = 1.0) {
  auto p = core::reference_params();
  p.drive.omega1 *= w1_scale;
  p.drive.delta0 = d0_ratio * p.drive.omega0;
  p.drive.delta1 = d1_ratio * p.drive.omega0;
  p.drive.aux = p.drive.matched_aux();
  return p;
}

Eigen::MatrixXcd restrict5(const Eigen::MatrixXcd& full, const core::LevelScheme& s) {
  const char* labels[] = {"00", "01", "10", "11", "rr"};
  Eigen::MatrixXcd out(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out(i, j) = full(s.index_of_label(labels[i]), s.index_of_label(labels[j]));
  return out;
}

}  // namespace

TEST(EffectiveModel, ClosedFormsAtReferencePoint) {
  const auto p = perturbation::with_delta(core::reference_params(), 0.0);
  const auto m = perturbation::derive_effective(p);
  const double w = p.drive.omega0;
  EXPECT_NEAR(m.d00, -w * w / (2.0 * 10.0 * w), 1e-12);
  EXPECT_NEAR(m.d11, w * w / (2.0 * 30.0 * w), 1e-12);
  EXPECT_NEAR(m.d01, w / 120.0 - w / 40.0, 1e-12);
  EXPECT_DOUBLE_EQ(m.d01, m.d10);
  EXPECT_NEAR(m.drr, w / 60.0 - w / 20.0, 1e-12);
  EXPECT_NEAR(m.omega_eff, w / 60.0 - w / 20.0, 1e-12);
  EXPECT_NEAR(m.dr0, w / 40.0 - w / 60.0, 1e-12);
  EXPECT_NEAR(m.dr1, w / 20.0 - w / 120.0, 1e-12);
  EXPECT_NEAR(m.delta, 0.0, 1e-9);
  EXPECT_TRUE(m.compensated);
  // Omega T / 2pi = 21.21 at the reference point
  EXPECT_NEAR(w * m.holonomic_time() / (2.0 * std::numbers::pi), 15.0 * std::numbers::sqrt2, 1e-9);
}

TEST(EffectiveModel, MatrixLayout) {
  auto p = perturbation::with_delta(core::reference_params(), 1.3);
  p.drive.aux_mode = core::AuxMode::off;
  const auto m = perturbation::derive_effective(p);
  EXPECT_FALSE(m.compensated);
  EXPECT_NEAR(m.matrix(perturbation::e00, perturbation::e00).real(), m.d00, 1e-12);
  EXPECT_NEAR(m.matrix(perturbation::err, perturbation::err).real(), 1.3, 1e-9);
  EXPECT_NEAR(m.matrix(perturbation::e01, perturbation::err).real(), m.omega_eff / 2.0, 1e-12);
  EXPECT_NEAR(m.matrix(perturbation::err, perturbation::e10).real(), m.omega_eff / 2.0, 1e-12);
  EXPECT_EQ(m.matrix(perturbation::e01, perturbation::e10), std::complex<double>(0.0));
  EXPECT_LT((m.matrix - m.matrix.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

// Closed forms against second-order elimination of the full term list.
class JamesOracle : public ::testing::TestWithParam<std::tuple<double, double, double, double, bool>> {};

TEST_P(JamesOracle, ClosedFormsMatchElimination) {
  const auto [d0, d1, w1, delta, aux_off] = GetParam();
  auto p = point(d0, d1, w1);
  if (aux_off) p.drive.aux_mode = core::AuxMode::off;
  p = perturbation::with_delta(p, delta * p.drive.omega0);
  const auto m = perturbation::derive_effective(p);
  const auto h = core::build_rotated_hamiltonian(p, core::Frame::v0_rotated);
  const Eigen::MatrixXcd j = oracle::james_effective(h);
  const double scale = p.drive.omega0;
  EXPECT_LT((restrict5(j, h.scheme()) - m.matrix).cwiseAbs().maxCoeff(), 1e-12 * scale);
  if (aux_off) {
    const auto& s = h.scheme();
    EXPECT_NEAR(j(s.index_of_label("r0"), s.index_of_label("r0")).real(), m.dr0, 1e-12 * scale);
    EXPECT_NEAR(j(s.index_of_label("0r"), s.index_of_label("0r")).real(), m.d0r, 1e-12 * scale);
    EXPECT_NEAR(j(s.index_of_label("r1"), s.index_of_label("r1")).real(), m.dr1, 1e-12 * scale);
    EXPECT_NEAR(j(s.index_of_label("1r"), s.index_of_label("1r")).real(), m.d1r, 1e-12 * scale);
  }
}

INSTANTIATE_TEST_SUITE_P(Points, JamesOracle,
                         ::testing::Values(std::tuple{10.0, 30.0, 1.0, 0.0, true}, std::tuple{10.0, 30.0, 1.0, 0.0, false},
                                           std::tuple{7.0, 25.0, 1.0, 0.05, true}, std::tuple{15.0, 21.0, 0.8, -0.1, true},
                                           std::tuple{20.0, 40.0, 1.3, 0.2, false}, std::tuple{6.0, 22.0, 1.0, 0.0, true}));

TEST(EffectiveModel, RubidiumDerivation) {
  auto p = core::reference_params();
  p.coupling.c6 = units::from_mhz(858400.0);
  const auto q = perturbation::with_delta(p, 0.0);
  EXPECT_NEAR(units::to_mhz(q.coupling.v), 200.33, 0.01);
  ASSERT_TRUE(q.coupling.distance);
  EXPECT_NEAR(*q.coupling.distance, 4.03, 0.005);
  EXPECT_NO_THROW(q.validate());
}

TEST(EffectiveModel, VForDeltaIdentity) {
  const auto p = core::reference_params();
  for (double delta : {-1.0, 0.0, 0.5, units::from_mhz(3.36)}) {
    const double v = perturbation::choose_v_for_delta(p, delta);
    const auto m = perturbation::effective_closed_form(p);
    EXPECT_NEAR(v, (p.drive.delta1 - p.drive.delta0) + delta - m.drr, 1e-9);
    auto q = p;
    q.coupling.v = v;
    EXPECT_NEAR(perturbation::derive_effective(q).delta, delta, 1e-9);
  }
}

TEST(EffectiveModel, DispersiveRate) {
  const auto p = perturbation::with_delta(core::reference_params(), units::from_mhz(3.36));
  const auto m = perturbation::derive_effective(p);
  const auto d = perturbation::dispersive_rate(m);
  EXPECT_NEAR(d.omega_d, m.omega_eff * m.omega_eff / (2.0 * m.delta), 1e-12);
  EXPECT_NEAR(d.gate_time, std::numbers::pi / std::abs(d.omega_d), 1e-12);
  EXPECT_NEAR(d.gate_time, 30.24, 1e-9);
  EXPECT_NEAR(d.matrix(0, 1).real(), -d.omega_d / 2.0, 1e-15);
  EXPECT_NEAR(d.matrix(1, 1).real(), -d.omega_d / 2.0, 1e-15);

  auto zero = m;
  zero.delta = 0.0;
  EXPECT_THROW((void)perturbation::dispersive_rate(zero), DomainError);
  auto close = m;
  close.delta = 1.4 * std::abs(m.omega_eff);
  EXPECT_THROW((void)perturbation::dispersive_rate(close), PerturbationInvalidError);
}

TEST(EffectiveModel, RegimeChecks) {
  log::set_quiet(true);
  EXPECT_THROW((void)perturbation::derive_effective(perturbation::with_delta(point(2.5, 30.0), 0.0)),
               PerturbationInvalidError);
  const std::size_t before = log::warning_count();
  EXPECT_NO_THROW((void)perturbation::derive_effective(perturbation::with_delta(point(4.5, 30.0), 0.0)));
  EXPECT_GT(log::warning_count(), before);

  // |D1 - V + D0| < W
  auto p = point(10.0, 30.0);
  p.coupling.v = p.drive.delta1 + p.drive.delta0;
  EXPECT_THROW((void)perturbation::derive_effective(p), PerturbationInvalidError);

  // symmetric detunings: W_eff = 0, flagged but not an error
  const auto sym = perturbation::derive_effective(perturbation::with_delta(point(20.0, 20.0), 0.0));
  EXPECT_EQ(sym.omega_eff, 0.0);
  EXPECT_THROW((void)sym.holonomic_time(), DegenerateGateError);
  log::set_quiet(false);
}

TEST(EffectiveModel, CompensationScopeDoesNotChangeMatrix) {
  auto p = perturbation::with_delta(core::reference_params(), 0.0);
  const auto a = perturbation::derive_effective(p);
  p.drive.compensation_scope = core::CompensationScope::ground_products;
  const auto b = perturbation::derive_effective(p);
  EXPECT_LT((a.matrix - b.matrix).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(NumericValidation, ClosedFormsMatchFullEvolution) {
  const auto rep = perturbation::validate_against_numeric(core::reference_params(), 0.05);
  EXPECT_TRUE(rep.passed) << "max error " << rep.max_error;
  EXPECT_GE(rep.checks.size(), 4u);
  for (const auto& c : rep.checks) EXPECT_LT(c.error, 0.05) << c.quantity;
}

TEST(NumericValidation, ErrorShrinksWithDetuning) {
  const auto coarse = perturbation::validate_against_numeric(point(10.0, 30.0), 1.0);
  const auto fine = perturbation::validate_against_numeric(point(20.0, 60.0), 1.0);
  EXPECT_LT(fine.max_error, coarse.max_error);
}

TEST(NumericValidation, SinusoidFitRecoversFrequency) {
  std::vector<double> t, y;
  for (int k = 0; k < 400; ++k) {
    t.push_back(0.01 * k);
    y.push_back(0.3 + 0.5 * std::cos(7.3 * t.back() + 0.4));
  }
  const auto f = perturbation::fit_sinusoid(t, y, 1.0, 20.0);
  EXPECT_NEAR(f.frequency, 7.3, 1e-6);
  EXPECT_NEAR(f.amplitude, 0.5, 1e-6);
  EXPECT_NEAR(f.offset, 0.3, 1e-6);
  EXPECT_GT(f.r_squared, 0.999999);
  std::vector<std::complex<double>> z;
  for (double s : t) z.push_back(std::polar(2.0, -5.0 * s + 1.0));
  EXPECT_NEAR(perturbation::phase_slope(t, z), -5.0, 1e-9);
}
