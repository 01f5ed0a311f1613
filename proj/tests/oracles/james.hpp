#pragma once

// Second-order time-averaged elimination, done directly on the full term list:
// H = D + sum_w (h_w e^{-i w t} + H.c.), w > 0, gives
// H_eff = D + sum_w [h_w^+, h_w] / w.

#include <cmath>
#include <map>

#include <Eigen/Dense>

#include "ugsb/core/hamiltonian.hpp"

namespace oracle {

inline Eigen::MatrixXcd james_effective(const ugsb::core::TimeDepHamiltonian& h) {
  const auto n = static_cast<Eigen::Index>(h.dimension());
  std::map<double, Eigen::MatrixXcd> groups;
  for (const auto& term : h.terms()) {
    const double w = std::abs(term.frequency);
    if (w == 0.0) continue;
    // frequencies reached through different frame shifts differ in the last bits
    auto it = groups.lower_bound(w * (1.0 - 1e-9));
    if (it == groups.end() || it->first > w * (1.0 + 1e-9)) it = groups.emplace(w, Eigen::MatrixXcd::Zero(n, n)).first;
    for (const auto& e : term.entries) {
      const auto r = static_cast<Eigen::Index>(e.row), c = static_cast<Eigen::Index>(e.col);
      if (term.frequency > 0.0) {
        it->second(c, r) += std::conj(e.value);
      } else {
        it->second(r, c) += e.value;
      }
    }
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = h.diagonal()[static_cast<std::size_t>(i)];
  for (const auto& term : h.terms()) {
    if (term.frequency != 0.0) continue;
    for (const auto& e : term.entries) {
      out(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.value;
      out(static_cast<Eigen::Index>(e.col), static_cast<Eigen::Index>(e.row)) += std::conj(e.value);
    }
  }
  for (const auto& [w, m] : groups) out += (m.adjoint() * m - m * m.adjoint()) / w;
  return out;
}

}  // namespace oracle
