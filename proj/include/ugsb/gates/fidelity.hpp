#pragma once

#include <string>

#include <Eigen/Dense>

#include "ugsb/core/level_scheme.hpp"

namespace ugsb::gates {

struct IdealGate {
  std::string label;
  Eigen::MatrixXcd unitary;  // on the computational subspace, binary order
};

/// |00><00| - |01><10| - |10><01| + |11><11|
IdealGate ideal_swap();
/// |1><1|_c (x) U_SWAP - |0><0|_c (x) I, control first
IdealGate ideal_fredkin();

/// |<target|psi>|^2
double state_fidelity(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& target);
/// <target|rho|target>
double state_fidelity(const Eigen::MatrixXcd& rho, const Eigen::VectorXcd& target);

/// (1/d) |tr(U' U_ideal^+)| on the d-dimensional computational subspace.
double gate_fidelity(const Eigen::MatrixXcd& actual, const IdealGate& ideal);

/// Full-basis target U_ideal|psi0> for a state in the computational subspace.
Eigen::VectorXcd ideal_target(const core::LevelScheme& scheme, const Eigen::VectorXcd& psi0, const IdealGate& ideal);

}  // namespace ugsb::gates
