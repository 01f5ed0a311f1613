#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ugsb/errors.hpp"
#include "ugsb/gates/nhqc.hpp"
#include "ugsb/gates/schedule.hpp"
#include "ugsb/gates/truth_table.hpp"
#include "ugsb/perturbation/effective_model.hpp"
#include "ugsb/robustness/scans.hpp"
#include "ugsb/units.hpp"

using namespace ugsb;
using gates::GateKind;

namespace {

const double kOmega = units::from_mhz(10.0);
const double kDelta = units::from_mhz(3.36);

core::ParamSet fredkin_params(double vc_mhz) {
  auto p = core::reference_params();
  p.control = core::ControlBlock{units::from_mhz(10.0), units::from_mhz(vc_mhz), units::from_mhz(vc_mhz)};
  return p;
}

}  // namespace

TEST(Schedule, SwapDurations) {
  const auto hol = gates::holonomic_swap_schedule(core::reference_params());
  ASSERT_EQ(hol.segments.size(), 1u);
  EXPECT_NEAR(kOmega * hol.total_time() / (2.0 * M_PI), 21.21, 0.01);
  EXPECT_EQ(hol.kind, GateKind::holonomic);
  const auto dyn = gates::dynamical_swap_schedule(core::reference_params(), kDelta);
  EXPECT_NEAR(dyn.total_time(), 30.24, 0.01);
  EXPECT_NO_THROW(hol.validate());
  gates::GateSchedule empty;
  EXPECT_THROW(empty.validate(), ConfigurationError);
  auto neg = hol;
  neg.segments[0].duration = -1.0;
  EXPECT_THROW(neg.validate(), ConfigurationError);
  EXPECT_EQ(gates::gate_kind_from_string(gates::to_string(GateKind::dynamical)), GateKind::dynamical);
  EXPECT_THROW((void)gates::gate_kind_from_string("adiabatic"), ConfigurationError);
}

TEST(Schedule, FredkinHasThreeSegments) {
  const auto s = gates::fredkin_schedule(fredkin_params(3.0), GateKind::holonomic, 0.0);
  ASSERT_EQ(s.segments.size(), 3u);
  EXPECT_NEAR(s.segments[0].duration, M_PI / kOmega, 1e-12);
  EXPECT_EQ(s.segments[0].duration, s.segments[2].duration);
  EXPECT_EQ(s.segments[1].kind, gates::SegmentKind::fredkin_swap);
  EXPECT_THROW((void)gates::fredkin_schedule(core::reference_params(), GateKind::holonomic, 0.0), ConfigurationError);
}

TEST(Schedule, OverrideTouchesOnlyRequestedFields) {
  auto p = perturbation::with_delta(core::reference_params(), 0.0);
  p.coupling.c6 = units::from_mhz(858400.0);
  const double v0 = p.coupling.v;
  gates::apply_override(p, gates::SegmentKind::fredkin_pulse, {.v = 1.0});
  EXPECT_EQ(p.coupling.v, v0);
  gates::apply_override(p, gates::SegmentKind::pair, {.doppler = std::array{0.1, -0.2}, .v = 2.0 * v0});
  EXPECT_EQ(p.coupling.v, 2.0 * v0);
  ASSERT_TRUE(p.coupling.distance.has_value());
  EXPECT_NEAR(*p.coupling.c6 / std::pow(*p.coupling.distance, 6), 2.0 * v0, 1e-9 * v0);
  EXPECT_EQ(p.doppler[1], -0.2);
  EXPECT_FALSE(p.leak_level);
  gates::apply_override(p, gates::SegmentKind::pair, {.tau = 100.0});
  EXPECT_TRUE(p.leak_level);
}

TEST(Schedule, SnapshotsEndAtGateTime) {
  const auto s = gates::holonomic_swap_schedule(core::reference_params());
  gates::RunOptions opt;
  opt.snapshot_times = {0.5, 1.0};
  const auto run = gates::run_schedule(s, {}, opt);
  ASSERT_EQ(run.times.size(), 3u);
  EXPECT_NEAR(run.times.back(), s.total_time(), 1e-12);
  for (const auto& c : run.columns) {
    const Eigen::MatrixXcd g = c.adjoint() * c;
    EXPECT_LT((g - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(TruthTable, HolonomicSwapPattern) {
  const auto t = gates::truth_table(gates::holonomic_swap_schedule(core::reference_params()));
  const auto swap = gates::ideal_swap();
  ASSERT_EQ(t.labels.size(), 4u);
  EXPECT_EQ(t.labels[1], "01");
  const auto pat = gates::TruthTable::pattern(swap);
  ASSERT_EQ(pat.size(), 4u);
  EXPECT_EQ(pat[1], std::make_pair(1, 2));
  EXPECT_GT(t.min_on_pattern(swap), 0.99);
  for (Eigen::Index r = 0; r < 4; ++r) {
    EXPECT_LE(t.populations.row(r).sum(), 1.0 + 1e-9);
    EXPECT_NEAR(t.populations.row(r).sum() + t.leakage(r), 1.0, 1e-12);
  }
  std::ostringstream os;
  gates::write_truth_table_csv(os, t, {"demo"});
  const std::string csv = os.str();
  EXPECT_EQ(csv.rfind("# demo\ninput,P(00),P(01),P(10),P(11),leakage\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

TEST(TruthTable, FredkinHolonomicFollowsControl) {
  const auto t = gates::truth_table(gates::fredkin_schedule(fredkin_params(3.0), GateKind::holonomic, 0.0));
  ASSERT_EQ(t.labels.size(), 8u);
  const auto f = gates::ideal_fredkin();
  EXPECT_GT(t.min_on_pattern(f), 0.97);
  for (Eigen::Index r = 0; r < 8; ++r) EXPECT_LE(t.populations.row(r).sum(), 1.0 + 1e-9);
}

TEST(Nhqc, HolonomicGateSatisfiesBothConditions) {
  const auto r = gates::nhqc_condition_check(gates::holonomic_swap_schedule(core::reference_params()));
  EXPECT_TRUE(r.cyclic_ok) << r.cyclic_deviation;
  EXPECT_TRUE(r.transport_ok) << r.transport_max;
  EXPECT_LT(r.cyclic_deviation, 1e-9);
}

TEST(Nhqc, DynamicalGateCarriesADynamicalPhase) {
  const auto r = gates::nhqc_condition_check(gates::dynamical_swap_schedule(core::reference_params(), kDelta));
  EXPECT_TRUE(r.cyclic_ok);
  EXPECT_FALSE(r.transport_ok);
}

TEST(Nhqc, FullModelCyclicDeviationIsSmall) {
  gates::NhqcOptions opt;
  opt.include_full_model = true;
  const auto r = gates::nhqc_condition_check(gates::holonomic_swap_schedule(core::reference_params()), {}, opt);
  ASSERT_TRUE(r.full_cyclic_deviation.has_value());
  EXPECT_TRUE(r.full_cyclic_ok) << *r.full_cyclic_deviation;
}

TEST(Nhqc, EffectivePropagatorIsUnitary) {
  const auto h = gates::schedule_effective_hamiltonian(gates::holonomic_swap_schedule(core::reference_params()));
  const auto u = gates::effective_propagator(h, 0.37);
  EXPECT_LT((u * u.adjoint() - perturbation::Matrix5::Identity()).norm(), 1e-13);
  EXPECT_LT((gates::effective_propagator(h, 0.0) - perturbation::Matrix5::Identity()).norm(), 1e-13);
}

TEST(LindbladSchedule, InfiniteLifetimeAgreesWithPure) {
  const auto s = gates::holonomic_swap_schedule(core::reference_params());
  const auto psi = robustness::plus_one_state();
  const double pure = robustness::swap_state_fidelity(s, psi);
  const double mixed = robustness::swap_state_fidelity_lindblad(s, psi, {.tau = 1e12});
  EXPECT_NEAR(mixed, pure, 1e-7);
  const double lossy = robustness::swap_state_fidelity_lindblad(s, psi, {.tau = 50.0});
  EXPECT_LT(lossy, pure);
}
