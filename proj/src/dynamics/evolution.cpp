#include "ugsb/dynamics/evolution.hpp"

#include <cmath>
#include <sstream>

#include "linear_engine.hpp"
#include "ugsb/dynamics/hamiltonian_apply.hpp"
#include "ugsb/dynamics/periodic.hpp"
#include "ugsb/errors.hpp"

namespace ugsb::dynamics {

using RowBlock = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void QuantumState::check_normalized(double tol) const {
  const double drift = std::abs(norm() - 1.0);
  if (!(drift <= tol)) {
    std::ostringstream msg;
    msg << "state norm drifted by " << drift << " (tolerance " << tol << ")";
    throw InvariantViolation(msg.str());
  }
}

QuantumState QuantumState::basis(const core::LevelScheme& scheme, std::size_t index) {
  if (index >= scheme.dimension()) throw ConfigurationError("basis index out of range");
  QuantumState s;
  s.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(scheme.dimension()));
  s.amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

QuantumState QuantumState::computational(const core::LevelScheme& scheme, std::span<const cplx> amplitudes) {
  const auto comp = scheme.computational_indices();
  if (amplitudes.size() != comp.size()) throw ConfigurationError("expected one amplitude per computational ket");
  QuantumState s;
  s.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(scheme.dimension()));
  for (std::size_t i = 0; i < comp.size(); ++i) s.amplitudes(static_cast<Eigen::Index>(comp[i])) = amplitudes[i];
  return s;
}

QuantumState QuantumState::product(const core::LevelScheme& scheme, std::span<const std::array<cplx, 2>> qubits) {
  const std::size_t atoms = scheme.atom_count();
  if (qubits.size() != atoms) throw ConfigurationError("expected one qubit state per atom");
  std::vector<cplx> amps(std::size_t{1} << atoms);
  for (std::size_t bits = 0; bits < amps.size(); ++bits) {
    cplx a = 1.0;
    for (std::size_t j = 0; j < atoms; ++j) a *= qubits[j][(bits >> (atoms - 1 - j)) & 1U];
    amps[bits] = a;
  }
  return computational(scheme, amps);
}

Eigen::MatrixXcd Propagator::restricted(std::size_t k) const {
  const auto m = static_cast<Eigen::Index>(subspace.size());
  Eigen::MatrixXcd out(m, m);
  for (Eigen::Index r = 0; r < m; ++r) out.row(r) = snapshots.at(k).row(static_cast<Eigen::Index>(subspace[r]));
  return out;
}

std::vector<Eigen::MatrixXcd> evolve_columns(const core::TimeDepHamiltonian& h_in, const Eigen::MatrixXcd& y0,
                                             double t0, double t1, std::span<const double> snapshot_times,
                                             const EvolutionOptions& options, EvolutionReport* report) {
  std::optional<PeriodInfo> period;
  if (options.acceleration != Acceleration::off) period = detect_period(h_in, options.max_denominator);
  const core::TimeDepHamiltonian h = period ? snap_to_period(h_in, *period) : h_in;
  const HamiltonianApplier applier(h);
  const std::size_t n = h.dimension();

  detail::LinearProblem prob;
  prob.column_size = n;
  prob.rhs = [&](double t, const cplx* x, cplx* dx, std::size_t batch) { applier.apply(t, x, dx, batch); };
  prob.to_columns = [n](const std::vector<cplx>& flat, std::size_t batch) {
    return Eigen::MatrixXcd(Eigen::Map<const RowBlock>(flat.data(), static_cast<Eigen::Index>(n),
                                                       static_cast<Eigen::Index>(batch)));
  };
  prob.from_columns = [](const Eigen::MatrixXcd& cols) {
    std::vector<cplx> flat(static_cast<std::size_t>(cols.size()));
    Eigen::Map<RowBlock>(flat.data(), cols.rows(), cols.cols()) = cols;
    return flat;
  };
  prob.column_cost = 2.0 * static_cast<double>(applier.entry_count()) + static_cast<double>(n);
  prob.max_frequency = applier.max_frequency();
  prob.scale = applier.scale();

  EvolutionReport local;
  auto out = detail::run_linear(prob, y0, t0, t1, snapshot_times, options, period, local);
  if (report) *report = local;
  return out;
}

StateTrajectory integrate_schrodinger(const core::TimeDepHamiltonian& h, const QuantumState& psi0, double t0,
                                      double t1, std::span<const double> snapshot_times,
                                      const EvolutionOptions& options) {
  if (static_cast<std::size_t>(psi0.amplitudes.size()) != h.dimension()) {
    throw ConfigurationError("state dimension does not match the Hamiltonian");
  }
  if (options.check_invariants) psi0.check_normalized(options.norm_tolerance);
  StateTrajectory tr;
  auto cols = evolve_columns(h, psi0.amplitudes, t0, t1, snapshot_times, options, &tr.report);
  tr.times.assign(snapshot_times.begin(), snapshot_times.end());
  if (tr.times.empty()) tr.times.push_back(t1);
  for (auto& c : cols) {
    tr.states.emplace_back(c.col(0));
    if (options.check_invariants) {
      QuantumState{tr.states.back(), h.frame()}.check_normalized(options.norm_tolerance);
    }
  }
  return tr;
}

Propagator propagator(const core::TimeDepHamiltonian& h, std::span<const std::size_t> subspace, double t0,
                      double t1, std::span<const double> snapshot_times, const EvolutionOptions& options) {
  const auto n = static_cast<Eigen::Index>(h.dimension());
  Propagator pr;
  pr.subspace.assign(subspace.begin(), subspace.end());
  if (pr.subspace.empty()) {
    for (std::size_t i = 0; i < h.dimension(); ++i) pr.subspace.push_back(i);
  }
  Eigen::MatrixXcd y0 = Eigen::MatrixXcd::Zero(n, static_cast<Eigen::Index>(pr.subspace.size()));
  for (std::size_t c = 0; c < pr.subspace.size(); ++c) {
    if (pr.subspace[c] >= h.dimension()) throw ConfigurationError("subspace index out of range");
    y0(static_cast<Eigen::Index>(pr.subspace[c]), static_cast<Eigen::Index>(c)) = 1.0;
  }
  pr.snapshots = evolve_columns(h, y0, t0, t1, snapshot_times, options, &pr.report);
  pr.times.assign(snapshot_times.begin(), snapshot_times.end());
  if (pr.times.empty()) pr.times.push_back(t1);
  if (options.check_invariants) {
    for (std::size_t k = 0; k < pr.snapshots.size(); ++k) {
      const Eigen::MatrixXcd& u = pr.snapshots[k];
      const Eigen::MatrixXcd gram = u.adjoint() * u;
      const double dev = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
      if (!(dev <= options.unitarity_tolerance)) {
        std::ostringstream msg;
        msg << "propagator columns lost orthonormality by " << dev << " at t=" << pr.times[k];
        throw InvariantViolation(msg.str());
      }
    }
  }
  return pr;
}

}  // namespace ugsb::dynamics
