#include "ugsb/gates/truth_table.hpp"

#include <algorithm>
#include <ostream>

#include "ugsb/dynamics/trajectory_io.hpp"
#include "ugsb/errors.hpp"

namespace ugsb::gates {

std::vector<std::pair<int, int>> TruthTable::pattern(const IdealGate& ideal) {
  std::vector<std::pair<int, int>> out;
  const Eigen::MatrixXcd& u = ideal.unitary;
  for (Eigen::Index in = 0; in < u.cols(); ++in) {
    Eigen::Index best = 0;
    u.col(in).cwiseAbs().maxCoeff(&best);
    out.emplace_back(static_cast<int>(in), static_cast<int>(best));
  }
  return out;
}

double TruthTable::min_on_pattern(const IdealGate& ideal) const {
  double lo = 1.0;
  for (const auto& [in, out] : pattern(ideal)) lo = std::min(lo, populations(in, out));
  return lo;
}

TruthTable truth_table(const Eigen::MatrixXcd& restricted, const core::LevelScheme& scheme) {
  const auto comp = scheme.computational_indices();
  if (static_cast<Eigen::Index>(comp.size()) != restricted.rows()) {
    throw ConfigurationError("truth table: propagator does not match the register");
  }
  TruthTable t;
  for (std::size_t k : comp) {
    std::string label;
    for (char ch : scheme.label(k)) label.push_back(ch);
    t.labels.push_back(label);
  }
  const auto m = restricted.rows();
  t.populations.resize(m, m);
  t.leakage.resize(m);
  for (Eigen::Index in = 0; in < m; ++in) {
    for (Eigen::Index out = 0; out < m; ++out) t.populations(in, out) = std::norm(restricted(out, in));
    t.leakage(in) = 1.0 - t.populations.row(in).sum();
  }
  return t;
}

TruthTable truth_table(const GateSchedule& schedule, const NoiseOverride& noise, const RunOptions& options) {
  const ScheduleRun run = run_schedule(schedule, noise, options);
  return truth_table(run.final_restricted(), run.scheme);
}

void write_truth_table_csv(std::ostream& os, const TruthTable& table, const std::vector<std::string>& header) {
  for (const auto& line : header) os << "# " << line << '\n';
  os << "input";
  for (const auto& l : table.labels) os << ",P(" << l << ")";
  os << ",leakage\n";
  for (Eigen::Index in = 0; in < table.populations.rows(); ++in) {
    os << table.labels[static_cast<std::size_t>(in)];
    for (Eigen::Index out = 0; out < table.populations.cols(); ++out) {
      os << ',' << dynamics::format_number(table.populations(in, out));
    }
    os << ',' << dynamics::format_number(table.leakage(in)) << '\n';
  }
}

}  // namespace ugsb::gates
