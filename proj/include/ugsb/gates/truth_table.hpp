#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/gates/fidelity.hpp"
#include "ugsb/gates/schedule.hpp"

namespace ugsb::gates {

/// populations(in, out) = |<out|U|in>|^2 over computational kets.
struct TruthTable {
  std::vector<std::string> labels;
  Eigen::MatrixXd populations;
  /// 1 - row sum: population that left the computational subspace.
  Eigen::VectorXd leakage;

  /// Indices (in, out) of the permutation pattern of `ideal`.
  static std::vector<std::pair<int, int>> pattern(const IdealGate& ideal);
  double min_on_pattern(const IdealGate& ideal) const;
};

TruthTable truth_table(const Eigen::MatrixXcd& restricted, const core::LevelScheme& scheme);
TruthTable truth_table(const GateSchedule& schedule, const NoiseOverride& noise = {}, const RunOptions& options = {});

void write_truth_table_csv(std::ostream& os, const TruthTable& table, const std::vector<std::string>& header = {});

}  // namespace ugsb::gates
