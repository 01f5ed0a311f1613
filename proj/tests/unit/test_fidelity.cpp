#include <gtest/gtest.h>

#include <random>

#include "ugsb/gates/average_fidelity.hpp"
#include "ugsb/gates/fidelity.hpp"

using namespace ugsb;
using gates::InitialStateGrid;

namespace {

Eigen::MatrixXcd random_unitary(int d, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  Eigen::MatrixXcd z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = {n(rng), n(rng)};
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(z).householderQ();
}

double direct_average(const Eigen::MatrixXcd& u, const gates::IdealGate& ideal, const InitialStateGrid& g) {
  const Eigen::MatrixXcd m = ideal.unitary.adjoint() * u;
  const int n = g.resolution();
  double sum = 0.0;
  std::array<int, 6> idx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1])
      for (idx[2] = 0; idx[2] < n; ++idx[2])
        for (idx[3] = 0; idx[3] < n; ++idx[3])
          for (idx[4] = 0; idx[4] < n; ++idx[4])
            for (idx[5] = 0; idx[5] < n; ++idx[5]) {
              const Eigen::Vector4cd psi = g.state(idx);
              sum += std::norm(psi.dot(m * psi));
            }
  return sum / static_cast<double>(g.size());
}

}  // namespace

TEST(IdealGates, SwapAndFredkinAreUnitaryWithExpectedPhases) {
  const auto swap = gates::ideal_swap();
  ASSERT_EQ(swap.unitary.rows(), 4);
  EXPECT_LT((swap.unitary * swap.unitary.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).norm(), 1e-15);
  EXPECT_EQ(swap.unitary(0, 0), std::complex<double>(1.0));
  EXPECT_EQ(swap.unitary(1, 2), std::complex<double>(-1.0));
  EXPECT_EQ(swap.unitary(2, 1), std::complex<double>(-1.0));
  EXPECT_EQ(swap.unitary(3, 3), std::complex<double>(1.0));

  const auto f = gates::ideal_fredkin();
  ASSERT_EQ(f.unitary.rows(), 8);
  EXPECT_LT((f.unitary * f.unitary.adjoint() - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-15);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(f.unitary(k, k), std::complex<double>(-1.0));
  EXPECT_EQ(f.unitary(5, 6), std::complex<double>(-1.0));
  EXPECT_EQ(f.unitary(6, 5), std::complex<double>(-1.0));
  EXPECT_EQ(f.unitary(7, 7), std::complex<double>(1.0));
}

TEST(GateFidelity, IgnoresGlobalPhaseAndPenalisesErrors) {
  const auto swap = gates::ideal_swap();
  EXPECT_NEAR(gates::gate_fidelity(swap.unitary, swap), 1.0, 1e-15);
  EXPECT_NEAR(gates::gate_fidelity(std::polar(1.0, 0.7) * swap.unitary, swap), 1.0, 1e-15);
  EXPECT_NEAR(gates::gate_fidelity(Eigen::MatrixXcd::Identity(4, 4), swap), 0.5, 1e-15);
}

TEST(StateFidelity, PureAndMixedAgree) {
  Eigen::VectorXcd a(2), b(2);
  a << 1.0, 0.0;
  b << std::sqrt(0.5), std::complex<double>(0.0, std::sqrt(0.5));
  EXPECT_NEAR(gates::state_fidelity(a, b), 0.5, 1e-15);
  const Eigen::MatrixXcd rho = a * a.adjoint();
  EXPECT_NEAR(gates::state_fidelity(rho, b), 0.5, 1e-15);
}

TEST(InitialStateGrid, StatesAreNormalisedAndCountIsNToTheSixth) {
  const InitialStateGrid g(5);
  EXPECT_EQ(g.size(), 15625u);
  EXPECT_NEAR(g.angle(4), 2.0 * M_PI, 1e-15);
  const auto psi = g.state({0, 1, 2, 3, 4, 0});
  EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
}

TEST(AverageFidelity, IdealGateScoresOne) {
  const auto swap = gates::ideal_swap();
  EXPECT_NEAR(gates::average_fidelity(swap.unitary, swap, InitialStateGrid(21)), 1.0, 1e-12);
}

class MomentsVsDirect : public ::testing::TestWithParam<int> {};

TEST_P(MomentsVsDirect, RandomUnitary) {
  const InitialStateGrid g(GetParam());
  const auto swap = gates::ideal_swap();
  const auto u = random_unitary(4, 100 + GetParam());
  const double ref = direct_average(u, swap, g);
  EXPECT_NEAR(gates::average_fidelity(u, swap, g), ref, 1e-12);
  EXPECT_NEAR(gates::average_fidelity_bruteforce(u, swap, g, kernels::scalar_kernels()), ref, 1e-12);
  if (const auto* fast = kernels::avx2_kernels()) {
    EXPECT_NEAR(gates::average_fidelity_bruteforce(u, swap, g, *fast), ref, 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Grids, MomentsVsDirect, ::testing::Values(2, 3, 4, 6));

TEST(AverageFidelity, NonUnitaryLeakageLowersTheScore) {
  const auto swap = gates::ideal_swap();
  const Eigen::MatrixXcd shrunk = 0.9 * swap.unitary;
  EXPECT_NEAR(gates::average_fidelity(shrunk, swap, InitialStateGrid(7)), 0.81, 1e-12);
}

TEST(AverageFidelity, SeriesMatchesPointwise) {
  const auto swap = gates::ideal_swap();
  const InitialStateGrid g(9);
  std::vector<Eigen::MatrixXcd> snaps{random_unitary(4, 1), random_unitary(4, 2), swap.unitary};
  const auto series = gates::average_fidelity_series(snaps, swap, g);
  ASSERT_EQ(series.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(series[k], gates::average_fidelity(snaps[k], swap, g), 1e-14);
  EXPECT_NEAR(series[2], 1.0, 1e-12);
}
