#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/gates/schedule.hpp"
#include "ugsb/perturbation/effective_model.hpp"

namespace ugsb::gates {

/// Cyclic-evolution (i) and parallel-transport (ii) conditions of a SWAP
/// schedule, evaluated on its effective Hamiltonian: the five-level model for
/// the holonomic gate, -W_d |B><B| for the dynamical one.
struct NhqcReport {
  double eval_time = 0.0;
  double cyclic_deviation = 0.0;
  double cyclic_threshold = 1e-3;
  bool cyclic_ok = false;
  double transport_max = 0.0;
  double transport_threshold = 0.0;
  bool transport_ok = false;
  /// Condition (i) from the full interaction-picture propagator, when requested.
  std::optional<double> full_cyclic_deviation;
  double full_cyclic_threshold = 5e-2;
  bool full_cyclic_ok = false;
};

struct NhqcOptions {
  /// Time at which (i) is evaluated; the gate time when unset.
  std::optional<double> eval_time;
  int transport_samples = 201;
  bool include_full_model = false;
  RunOptions run;
};

/// `subspace` holds computational-basis vectors (length 4); empty means
/// {|00>, |01>, |10>, |11>}.
NhqcReport nhqc_condition_check(const GateSchedule& schedule, const std::vector<Eigen::Vector4cd>& subspace = {},
                                const NhqcOptions& options = {});

/// Effective Hamiltonian on {|00>, |01>, |10>, |11>, |rr>} used by the check.
perturbation::Matrix5 schedule_effective_hamiltonian(const GateSchedule& schedule);

/// exp(-i H t) for a Hermitian 5x5 matrix.
perturbation::Matrix5 effective_propagator(const perturbation::Matrix5& h, double t);

}  // namespace ugsb::gates
