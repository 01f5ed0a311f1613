#include "ugsb/gates/average_fidelity.hpp"

#include <cmath>
#include <numbers>

#include "ugsb/errors.hpp"

namespace ugsb::gates {

using cplx = std::complex<double>;

InitialStateGrid::InitialStateGrid(int n) : n_(n) {
  if (n < 2) throw DegenerateGateError("average-fidelity grid needs N >= 2");
}

double InitialStateGrid::angle(int j) const { return 2.0 * std::numbers::pi * (j + 1) / n_; }

std::size_t InitialStateGrid::size() const {
  std::size_t s = 1;
  for (int i = 0; i < 6; ++i) s *= static_cast<std::size_t>(n_);
  return s;
}

Eigen::Vector4cd InitialStateGrid::state(const std::array<int, 6>& idx) const {
  const double b1 = angle(idx[0]), b2 = angle(idx[1]), b3 = angle(idx[2]);
  const double c1 = std::cos(b1), c2 = std::cos(b2);
  Eigen::Vector4cd psi;
  psi(0) = std::sin(b1);
  psi(1) = c1 * std::sin(b2) * std::polar(1.0, angle(idx[3]));
  psi(2) = c1 * c2 * std::sin(b3) * std::polar(1.0, angle(idx[4]));
  psi(3) = c1 * c2 * std::cos(b3) * std::polar(1.0, angle(idx[5]));
  return psi;
}

namespace {

Eigen::Matrix4cd overlap_matrix(const Eigen::MatrixXcd& actual, const IdealGate& ideal) {
  if (actual.rows() != 4 || actual.cols() != 4 || ideal.unitary.rows() != 4) {
    throw ConfigurationError("average fidelity is defined for two-qubit gates");
  }
  return ideal.unitary.adjoint() * actual;
}

// W[i][j][k][l] = mean conj(psi_i) psi_j psi_k conj(psi_l) over the grid.
struct Moments {
  double w[4][4][4][4];
};

Moments grid_moments(const InitialStateGrid& grid) {
  const int n = grid.resolution();
  // amplitude part over (b1, b2, b3)
  double amp[4][4][4][4] = {};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const double b1 = grid.angle(a), b2 = grid.angle(b), b3 = grid.angle(c);
        const double r[4] = {std::sin(b1), std::cos(b1) * std::sin(b2), std::cos(b1) * std::cos(b2) * std::sin(b3),
                             std::cos(b1) * std::cos(b2) * std::cos(b3)};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
              for (int l = 0; l < 4; ++l) amp[i][j][k][l] += r[i] * r[j] * r[k] * r[l];
      }
    }
  }
  const double inv = 1.0 / (static_cast<double>(n) * n * n);
  // phase averages mean_b e^{i m b} for m = -2..2
  double phase_mean[5];
  for (int m = -2; m <= 2; ++m) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += std::polar(1.0, m * grid.angle(j));
    phase_mean[m + 2] = (s / static_cast<double>(n)).real();
  }
  Moments mo{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int net[4] = {0, 0, 0, 0};
          --net[i];
          ++net[j];
          ++net[k];
          --net[l];
          double ph = 1.0;
          for (int axis = 1; axis < 4; ++axis) ph *= phase_mean[net[axis] + 2];
          mo.w[i][j][k][l] = amp[i][j][k][l] * inv * ph;
        }
  return mo;
}

double contract(const Eigen::Matrix4cd& m, const Moments& mo) {
  // |psi^+ M psi|^2 = sum conj(psi_i) psi_j psi_l conj(psi_k) M_ij conj(M_lk)
  double f = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx mij = m(i, j);
      if (mij == cplx{}) continue;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          f += (mij * std::conj(m(l, k))).real() * mo.w[i][j][l][k];
        }
    }
  return f;
}

}  // namespace

double average_fidelity(const Eigen::MatrixXcd& actual, const IdealGate& ideal, const InitialStateGrid& grid) {
  return contract(overlap_matrix(actual, ideal), grid_moments(grid));
}

std::vector<double> average_fidelity_series(const std::vector<Eigen::MatrixXcd>& restricted_snapshots,
                                            const IdealGate& ideal, const InitialStateGrid& grid) {
  const Moments mo = grid_moments(grid);
  std::vector<double> out;
  out.reserve(restricted_snapshots.size());
  for (const auto& u : restricted_snapshots) out.push_back(contract(overlap_matrix(u, ideal), mo));
  return out;
}

double average_fidelity_bruteforce(const Eigen::MatrixXcd& actual, const IdealGate& ideal,
                                   const InitialStateGrid& grid, const kernels::KernelTable& table) {
  const Eigen::Matrix4cd m = overlap_matrix(actual, ideal);
  const int n = grid.resolution();
  std::vector<double> cos_tab(static_cast<std::size_t>(n)), sin_tab(static_cast<std::size_t>(n));
  std::vector<cplx> phase(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    cos_tab[static_cast<std::size_t>(j)] = std::cos(grid.angle(j));
    sin_tab[static_cast<std::size_t>(j)] = std::sin(grid.angle(j));
    phase[static_cast<std::size_t>(j)] = cplx(cos_tab[static_cast<std::size_t>(j)], sin_tab[static_cast<std::size_t>(j)]);
  }
  double total = 0.0;
  for (int a = 0; a < n; ++a) {
    const double s1 = std::sin(grid.angle(a)), c1 = std::cos(grid.angle(a));
    for (int b = 0; b < n; ++b) {
      const double s2 = std::sin(grid.angle(b)), c2 = std::cos(grid.angle(b));
      for (int c = 0; c < n; ++c) {
        const double s3 = std::sin(grid.angle(c)), c3 = std::cos(grid.angle(c));
        const double d = c1 * c2 * c3;
        for (int e = 0; e < n; ++e) {
          for (int f = 0; f < n; ++f) {
            const cplx psi[3] = {s1, c1 * s2 * phase[static_cast<std::size_t>(e)],
                                 c1 * c2 * s3 * phase[static_cast<std::size_t>(f)]};
            cplx A = d * d * m(3, 3), B = 0.0, C = 0.0;
            for (int i = 0; i < 3; ++i) {
              for (int j = 0; j < 3; ++j) A += std::conj(psi[i]) * m(i, j) * psi[j];
              B += std::conj(psi[i]) * m(i, 3);
              C += m(3, i) * psi[i];
            }
            total += table.phase_line_abs2(A, d * B, d * C, cos_tab.data(), sin_tab.data(), static_cast<std::size_t>(n));
          }
        }
      }
    }
  }
  return total / static_cast<double>(grid.size());
}

}  // namespace ugsb::gates
