#include "ugsb/dynamics/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ugsb::dynamics {

std::optional<PeriodInfo> detect_period(const core::TimeDepHamiltonian& h, int max_denominator,
                                        double rel_tol) {
  std::vector<double> freqs;
  for (const auto& t : h.terms()) {
    if (t.frequency != 0.0) freqs.push_back(std::abs(t.frequency));
  }
  if (freqs.empty()) return std::nullopt;
  const double lowest = *std::min_element(freqs.begin(), freqs.end());
  for (int q = 1; q <= max_denominator; ++q) {
    const double base = lowest / q;
    const bool ok = std::all_of(freqs.begin(), freqs.end(), [&](double f) {
      const double n = std::round(f / base);
      return n >= 1.0 && std::abs(f - n * base) <= rel_tol * f;
    });
    if (ok) return PeriodInfo{base, 2.0 * std::numbers::pi / base};
  }
  return std::nullopt;
}

core::TimeDepHamiltonian snap_to_period(const core::TimeDepHamiltonian& h, const PeriodInfo& info) {
  core::TimeDepHamiltonian out(h.scheme(), h.frame());
  for (std::size_t i = 0; i < h.dimension(); ++i) out.add_diagonal(i, h.diagonal()[i]);
  for (const auto& t : h.terms()) {
    const double n = std::round(t.frequency / info.base_frequency);
    const double w = t.frequency == 0.0 ? 0.0 : n * info.base_frequency;
    for (const auto& e : t.entries) out.add_coupling(e.row, e.col, e.value, w);
  }
  return out;
}

MatrixPowers::MatrixPowers(Eigen::MatrixXcd base) { pow2_.push_back(std::move(base)); }

const Eigen::MatrixXcd& MatrixPowers::pow2(std::size_t j) {
  while (pow2_.size() <= j) {
    const Eigen::MatrixXcd& last = pow2_.back();
    Eigen::MatrixXcd sq = last * last;
    pow2_.push_back(std::move(sq));
  }
  return pow2_[j];
}

Eigen::MatrixXcd MatrixPowers::apply(std::uint64_t k, const Eigen::MatrixXcd& x) {
  Eigen::MatrixXcd out = x;
  for (std::size_t j = 0; k != 0; ++j, k >>= 1) {
    if (k & 1U) out = pow2(j) * out;
  }
  return out;
}

Eigen::MatrixXcd MatrixPowers::power(std::uint64_t k) {
  const auto n = pow2_.front().rows();
  return apply(k, Eigen::MatrixXcd::Identity(n, n));
}

}  // namespace ugsb::dynamics
