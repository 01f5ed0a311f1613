#include "ugsb/gates/nhqc.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "ugsb/errors.hpp"

namespace ugsb::gates {

using perturbation::Matrix5;
using cplx = std::complex<double>;

Matrix5 schedule_effective_hamiltonian(const GateSchedule& schedule) {
  if (schedule.segments.size() != 1 || schedule.segments[0].kind != SegmentKind::pair) {
    throw ConfigurationError("NHQC check expects a single-segment SWAP schedule");
  }
  const auto model = perturbation::derive_effective(schedule.segments[0].params);
  if (schedule.kind == GateKind::holonomic) return model.matrix;
  const auto disp = perturbation::dispersive_rate(model);
  Matrix5 h = Matrix5::Zero();
  h.block<2, 2>(perturbation::e01, perturbation::e01) = disp.matrix;
  return h;
}

Matrix5 effective_propagator(const Matrix5& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix5> es(h);
  const Eigen::Matrix<cplx, 5, 1> phases = (es.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

using Vec5 = Eigen::Matrix<cplx, 5, 1>;

Matrix5 projector(const std::vector<Vec5>& states) {
  Matrix5 p = Matrix5::Zero();
  for (const auto& s : states) p += s * s.adjoint();
  return p;
}

}  // namespace

NhqcReport nhqc_condition_check(const GateSchedule& schedule, const std::vector<Eigen::Vector4cd>& subspace_in,
                                const NhqcOptions& options) {
  std::vector<Eigen::Vector4cd> subspace = subspace_in;
  if (subspace.empty()) {
    for (int i = 0; i < 4; ++i) subspace.push_back(Eigen::Vector4cd::Unit(i));
  }
  const Matrix5 h = schedule_effective_hamiltonian(schedule);
  const double T = schedule.total_time();
  const auto model = perturbation::derive_effective(schedule.segments[0].params);

  std::vector<Vec5> initial;
  for (const auto& s : subspace) {
    Vec5 v = Vec5::Zero();
    v.head<4>() = s;
    initial.push_back(v);
  }

  NhqcReport rep;
  rep.eval_time = options.eval_time.value_or(T);
  const Matrix5 u = effective_propagator(h, rep.eval_time);
  std::vector<Vec5> evolved;
  for (const auto& v : initial) evolved.push_back(u * v);
  rep.cyclic_deviation = (projector(evolved) - projector(initial)).cwiseAbs().maxCoeff();
  rep.cyclic_ok = rep.cyclic_deviation < rep.cyclic_threshold;

  rep.transport_threshold = 1e-6 * std::abs(model.omega_eff);
  const int samples = std::max(2, options.transport_samples);
  for (int k = 0; k < samples; ++k) {
    const double t = T * k / (samples - 1);
    const Matrix5 ut = effective_propagator(h, t);
    std::vector<Vec5> phi;
    for (const auto& v : initial) phi.push_back(ut * v);
    for (const auto& a : phi)
      for (const auto& b : phi) rep.transport_max = std::max(rep.transport_max, std::abs(a.dot(h * b)));
  }
  rep.transport_ok = rep.transport_max < rep.transport_threshold;

  if (options.include_full_model) {
    RunOptions ro = options.run;
    ro.snapshot_times.clear();
    if (options.eval_time && *options.eval_time < T) ro.snapshot_times.push_back(*options.eval_time);
    const ScheduleRun run = run_schedule(schedule, {}, ro);
    const Eigen::MatrixXcd uf = run.restricted(0);
    Eigen::Matrix4cd p0 = Eigen::Matrix4cd::Zero(), pt = Eigen::Matrix4cd::Zero();
    for (const auto& s : subspace) {
      const Eigen::Vector4cd e = uf * s;
      p0 += s * s.adjoint();
      pt += e * e.adjoint();
    }
    rep.full_cyclic_deviation = (pt - p0).cwiseAbs().maxCoeff();
    rep.full_cyclic_ok = *rep.full_cyclic_deviation < rep.full_cyclic_threshold;
  }
  return rep;
}

}  // namespace ugsb::gates
