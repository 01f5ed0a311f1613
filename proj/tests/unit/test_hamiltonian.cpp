#include <gtest/gtest.h>

#include <cmath>

#include "ugsb/core/builders.hpp"
#include "ugsb/errors.hpp"
#include "ugsb/perturbation/effective_model.hpp"
#include "ugsb/units.hpp"

using namespace ugsb;
using core::Frame;

namespace {

core::ParamSet gate_params(core::AuxMode mode = core::AuxMode::ideal_compensation) {
  auto p = core::reference_params();
  p.drive.aux_mode = mode;
  return perturbation::with_delta(p, 0.0);
}

}  // namespace

TEST(Hamiltonian, CouplingsMergeByFrequencyAndRejectDiagonal) {
  core::TimeDepHamiltonian h(core::LevelScheme{});
  h.add_coupling(0, 2, 1.0, 5.0);
  h.add_coupling(1, 2, 2.0, 5.0);
  h.add_coupling(1, 2, 0.0, 7.0);
  EXPECT_EQ(h.terms().size(), 1u);
  EXPECT_EQ(h.entry_count(), 2u);
  EXPECT_THROW(h.add_coupling(3, 3, 1.0, 0.0), ConfigurationError);
  EXPECT_DOUBLE_EQ(h.max_frequency(), 5.0);
}

TEST(Hamiltonian, HermitianAtAllTimes) {
  for (auto mode : {core::AuxMode::off, core::AuxMode::ideal_compensation, core::AuxMode::explicit_e}) {
    const auto h = core::build_interaction_hamiltonian(gate_params(mode));
    for (double t : {0.0, 0.013, 0.7, 2.1}) {
      const Eigen::MatrixXcd m = h.evaluate(t);
      EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Hamiltonian, InteractionPictureStructure) {
  const auto p = gate_params(core::AuxMode::off);
  const auto h = core::build_interaction_hamiltonian(p);
  const auto& s = h.scheme();
  const Eigen::MatrixXcd m = h.evaluate(0.0);
  EXPECT_NEAR(m(s.index_of_label("rr"), s.index_of_label("rr")).real(), p.coupling.v, 1e-12);
  EXPECT_NEAR(std::abs(m(s.index_of_label("r0"), s.index_of_label("00"))), p.drive.omega0 / 2.0, 1e-12);
  EXPECT_NEAR(std::abs(m(s.index_of_label("0r"), s.index_of_label("01"))), p.drive.omega1 / 2.0, 1e-12);
  EXPECT_EQ(m(s.index_of_label("01"), s.index_of_label("10")), std::complex<double>(0.0));
  // leg 0 rotates at +D0, leg 1 at -D1
  const double t = 0.01;
  const auto z = h.evaluate(t)(s.index_of_label("r0"), s.index_of_label("00")) / (p.drive.omega0 / 2.0);
  EXPECT_NEAR(std::arg(z), std::remainder(p.drive.delta0 * t, 2.0 * M_PI), 1e-9);
  const auto w = h.evaluate(t)(s.index_of_label("r1"), s.index_of_label("11")) / (p.drive.omega1 / 2.0);
  EXPECT_NEAR(std::arg(w), std::remainder(-p.drive.delta1 * t, 2.0 * M_PI), 1e-9);
}

TEST(Hamiltonian, IdealCompensationShiftsGroundLevels) {
  const auto p = gate_params(core::AuxMode::ideal_compensation);
  const auto h = core::build_interaction_hamiltonian(p);
  const auto& s = h.scheme();
  const double a = p.drive.omega0 * p.drive.omega0 / (4.0 * p.drive.delta0);
  const double b = p.drive.omega1 * p.drive.omega1 / (4.0 * p.drive.delta1);
  EXPECT_NEAR(h.diagonal()[s.index_of_label("00")], 2.0 * a, 1e-12);
  EXPECT_NEAR(h.diagonal()[s.index_of_label("01")], a - b, 1e-12);
  EXPECT_NEAR(h.diagonal()[s.index_of_label("11")], -2.0 * b, 1e-12);
  EXPECT_NEAR(h.diagonal()[s.index_of_label("r0")], a, 1e-12);

  auto q = p;
  q.drive.compensation_scope = core::CompensationScope::ground_products;
  const auto g = core::build_interaction_hamiltonian(q);
  const auto m = perturbation::effective_closed_form(q);
  EXPECT_NEAR(g.diagonal()[s.index_of_label("00")], -m.d00, 1e-12);
  EXPECT_NEAR(g.diagonal()[s.index_of_label("01")], -m.d01, 1e-12);
  EXPECT_NEAR(g.diagonal()[s.index_of_label("r0")], 0.0, 1e-12);
}

TEST(Hamiltonian, RotatedFramesDescribeTheSameDynamics) {
  // H' = U H U^+ - E P with U = exp(i t E P)
  const auto p = gate_params(core::AuxMode::off);
  const auto h = core::build_interaction_hamiltonian(p);
  const auto weights = core::pair_rydberg_projector(p);
  for (auto [frame, energy] : {std::pair{Frame::v_rotated, p.coupling.v},
                               std::pair{Frame::v0_rotated, p.drive.delta1 - p.drive.delta0}}) {
    const auto r = core::build_rotated_hamiltonian(p, frame);
    EXPECT_EQ(r.frame(), frame);
    for (double t : {0.0, 0.37, 1.9}) {
      Eigen::VectorXcd u(static_cast<Eigen::Index>(weights.size()));
      for (std::size_t k = 0; k < weights.size(); ++k) u(k) = std::polar(1.0, t * energy * weights[k]);
      Eigen::MatrixXcd expect = u.asDiagonal() * h.evaluate(t) * u.conjugate().asDiagonal();
      for (std::size_t k = 0; k < weights.size(); ++k) expect(k, k) -= energy * weights[k];
      EXPECT_LT((r.evaluate(t) - expect).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
  const auto v0 = core::build_rotated_hamiltonian(p, Frame::v0_rotated);
  const auto& s = v0.scheme();
  EXPECT_NEAR(v0.diagonal()[s.index_of_label("rr")], p.coupling.v - (p.drive.delta1 - p.drive.delta0), 1e-9);
}

TEST(Hamiltonian, DopplerShiftsRydbergLevels) {
  auto p = gate_params(core::AuxMode::off);
  p.doppler = {0.3, -0.2};
  const auto h = core::build_interaction_hamiltonian(p);
  const auto& s = h.scheme();
  EXPECT_NEAR(h.diagonal()[s.index_of_label("r0")], 0.3, 1e-12);
  EXPECT_NEAR(h.diagonal()[s.index_of_label("1r")], -0.2, 1e-12);
  EXPECT_NEAR(h.diagonal()[s.index_of_label("rr")], p.coupling.v + 0.1, 1e-9);
}

TEST(Hamiltonian, ExplicitAuxTerms) {
  const auto p = gate_params(core::AuxMode::explicit_e);
  const auto h = core::build_interaction_hamiltonian(p);
  const auto& s = h.scheme();
  const Eigen::MatrixXcd m = h.evaluate(0.0);
  EXPECT_NEAR(std::abs(m(s.index_of_label("00"), s.index_of_label("e0"))), p.drive.aux.omega0 / 2.0, 1e-12);
  EXPECT_NEAR(std::abs(m(s.index_of_label("10"), s.index_of_label("e0"))), p.drive.aux.omega1 / 2.0, 1e-12);
  EXPECT_NEAR(h.diagonal()[s.index_of_label("00")], 0.0, 1e-12);
}

TEST(Hamiltonian, FredkinSteps) {
  auto p = gate_params(core::AuxMode::off);
  p.control = core::ControlBlock{units::from_mhz(10.0), units::from_mhz(3.0), units::from_mhz(5.0), false, 0.0};
  const auto pulse = core::build_fredkin_hamiltonian(p, core::FredkinStep::pulse);
  const auto swap = core::build_fredkin_hamiltonian(p, core::FredkinStep::swap);
  const auto& s = pulse.scheme();
  EXPECT_EQ(s.dimension(), 27u);
  const Eigen::MatrixXcd m = pulse.evaluate(0.3);
  EXPECT_NEAR(std::abs(m(s.index_of_label("r01"), s.index_of_label("001"))), p.control->omega_c / 2.0, 1e-12);
  EXPECT_NEAR(std::abs(m(s.index_of_label("0r1"), s.index_of_label("001"))), 0.0, 1e-12);
  const Eigen::MatrixXcd w = swap.evaluate(0.0);
  EXPECT_NEAR(w(s.index_of_label("rr0"), s.index_of_label("rr0")).real(), p.control->v1c, 1e-12);
  EXPECT_NEAR(w(s.index_of_label("r0r"), s.index_of_label("r0r")).real(), p.control->v2c, 1e-12);
  EXPECT_NEAR(w(s.index_of_label("rrr"), s.index_of_label("rrr")).real(), p.control->v1c + p.control->v2c + p.coupling.v,
              1e-9);
  EXPECT_NEAR(std::abs(w(s.index_of_label("r01"), s.index_of_label("001"))), 0.0, 1e-12);
  EXPECT_THROW((void)core::build_interaction_hamiltonian(p), ConfigurationError);
}
