#include "ugsb/gates/fidelity.hpp"

#include <cmath>

#include "ugsb/errors.hpp"

namespace ugsb::gates {

IdealGate ideal_swap() {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 2) = -1.0;
  u(2, 1) = -1.0;
  u(3, 3) = 1.0;
  return IdealGate{"SWAP", u};
}

IdealGate ideal_fredkin() {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(8, 8);
  u.topLeftCorner(4, 4) = -Eigen::MatrixXcd::Identity(4, 4);
  u.bottomRightCorner(4, 4) = ideal_swap().unitary;
  return IdealGate{"Fredkin", u};
}

double state_fidelity(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& target) {
  if (psi.size() != target.size()) throw ConfigurationError("state dimensions differ");
  return std::norm(target.dot(psi));
}

double state_fidelity(const Eigen::MatrixXcd& rho, const Eigen::VectorXcd& target) {
  if (rho.rows() != target.size()) throw ConfigurationError("state dimensions differ");
  return (target.adjoint() * rho * target)(0, 0).real();
}

double gate_fidelity(const Eigen::MatrixXcd& actual, const IdealGate& ideal) {
  if (actual.rows() != ideal.unitary.rows() || actual.cols() != ideal.unitary.cols()) {
    throw ConfigurationError("gate fidelity: dimension mismatch with " + ideal.label);
  }
  return std::abs((actual * ideal.unitary.adjoint()).trace()) / static_cast<double>(actual.rows());
}

Eigen::VectorXcd ideal_target(const core::LevelScheme& scheme, const Eigen::VectorXcd& psi0, const IdealGate& ideal) {
  const auto comp = scheme.computational_indices();
  if (static_cast<Eigen::Index>(comp.size()) != ideal.unitary.rows()) {
    throw ConfigurationError("ideal gate does not match the register size");
  }
  Eigen::VectorXcd c(static_cast<Eigen::Index>(comp.size()));
  for (std::size_t i = 0; i < comp.size(); ++i) c(static_cast<Eigen::Index>(i)) = psi0(static_cast<Eigen::Index>(comp[i]));
  const Eigen::VectorXcd out_c = ideal.unitary * c;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi0.size());
  for (std::size_t i = 0; i < comp.size(); ++i) out(static_cast<Eigen::Index>(comp[i])) = out_c(static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace ugsb::gates
