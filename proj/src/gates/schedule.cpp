#include "ugsb/gates/schedule.hpp"

#include <algorithm>
#include <numbers>

#include "ugsb/errors.hpp"
#include "ugsb/perturbation/effective_model.hpp"

namespace ugsb::gates {

using core::ParamSet;

std::string_view to_string(GateKind kind) { return kind == GateKind::holonomic ? "holonomic" : "dynamical"; }

GateKind gate_kind_from_string(std::string_view s) {
  if (s == "holonomic") return GateKind::holonomic;
  if (s == "dynamical") return GateKind::dynamical;
  throw ConfigurationError("unknown gate type '" + std::string(s) + "'");
}

double GateSchedule::total_time() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

const ParamSet& GateSchedule::gate_params() const {
  for (const auto& s : segments) {
    if (s.kind != SegmentKind::fredkin_pulse) return s.params;
  }
  return segments.at(0).params;
}

void GateSchedule::validate() const {
  if (segments.empty()) throw ConfigurationError("schedule '" + name + "' has no segments");
  for (const auto& s : segments) {
    if (!(s.duration > 0.0)) throw ConfigurationError("segment '" + s.label + "' has non-positive duration");
  }
}

namespace {

double gate_time(const ParamSet& p, GateKind kind) {
  const auto model = perturbation::derive_effective(p);
  if (kind == GateKind::holonomic) return model.holonomic_time();
  return perturbation::dispersive_rate(model).gate_time;
}

}  // namespace

GateSchedule holonomic_swap_schedule(const ParamSet& params) {
  if (params.control) throw ConfigurationError("SWAP schedule takes a two-atom parameter set");
  const ParamSet p = perturbation::with_delta(params, 0.0);
  GateSchedule s{"holonomic SWAP", GateKind::holonomic, {}};
  s.segments.push_back(GateSegment{SegmentKind::pair, gate_time(p, GateKind::holonomic), p, "swap"});
  return s;
}

GateSchedule dynamical_swap_schedule(const ParamSet& params, double delta) {
  if (params.control) throw ConfigurationError("SWAP schedule takes a two-atom parameter set");
  if (delta == 0.0) throw DomainError("dynamical SWAP needs delta != 0; use the holonomic schedule");
  const ParamSet p = perturbation::with_delta(params, delta);
  GateSchedule s{"dynamical SWAP", GateKind::dynamical, {}};
  s.segments.push_back(GateSegment{SegmentKind::pair, gate_time(p, GateKind::dynamical), p, "swap"});
  return s;
}

GateSchedule swap_schedule(const ParamSet& params, GateKind kind, double delta) {
  return kind == GateKind::holonomic ? holonomic_swap_schedule(params) : dynamical_swap_schedule(params, delta);
}

GateSchedule fredkin_schedule(const ParamSet& params, GateKind kind, double delta) {
  if (!params.control) throw ConfigurationError("Fredkin schedule needs a control block");
  const ParamSet p = perturbation::with_delta(params, kind == GateKind::holonomic ? 0.0 : delta);
  const double t_pi = std::numbers::pi / p.control->omega_c;
  GateSchedule s{std::string(to_string(kind)) + " Fredkin", kind, {}};
  s.segments.push_back(GateSegment{SegmentKind::fredkin_pulse, t_pi, p, "control pi pulse"});
  s.segments.push_back(GateSegment{SegmentKind::fredkin_swap, gate_time(p, kind), p, "target swap"});
  s.segments.push_back(GateSegment{SegmentKind::fredkin_pulse, t_pi, p, "control pi pulse"});
  return s;
}

core::TimeDepHamiltonian segment_hamiltonian(const GateSegment& segment) {
  switch (segment.kind) {
    case SegmentKind::pair: return core::build_interaction_hamiltonian(segment.params);
    case SegmentKind::fredkin_pulse: return core::build_fredkin_hamiltonian(segment.params, core::FredkinStep::pulse);
    case SegmentKind::fredkin_swap: return core::build_fredkin_hamiltonian(segment.params, core::FredkinStep::swap);
  }
  throw ConfigurationError("unknown segment kind");
}

void apply_override(ParamSet& params, SegmentKind kind, const NoiseOverride& noise) {
  if (noise.doppler) params.doppler = *noise.doppler;
  if (noise.v && kind == SegmentKind::pair) {
    params.coupling.v = *noise.v;
    params.coupling.distance.reset();
    if (params.coupling.c6 && *noise.v > 0.0) {
      params.coupling.distance = core::distance_for_strength(*params.coupling.c6, *noise.v);
    }
  }
  if (noise.tau) params.leak_level = true;
}

core::LevelScheme run_scheme(const GateSchedule& schedule, const NoiseOverride& noise) {
  ParamSet p = schedule.segments.at(0).params;
  apply_override(p, schedule.segments.at(0).kind, noise);
  return p.scheme();
}

Eigen::MatrixXcd ScheduleRun::restricted(std::size_t k) const {
  const auto m = static_cast<Eigen::Index>(computational.size());
  Eigen::MatrixXcd out(m, m);
  for (Eigen::Index r = 0; r < m; ++r) out.row(r) = columns.at(k).row(static_cast<Eigen::Index>(computational[r]));
  return out;
}

Eigen::VectorXcd ScheduleRun::state_at(std::size_t k, const Eigen::VectorXcd& psi0) const {
  Eigen::VectorXcd c(static_cast<Eigen::Index>(computational.size()));
  double outside = psi0.squaredNorm();
  for (std::size_t i = 0; i < computational.size(); ++i) {
    c(static_cast<Eigen::Index>(i)) = psi0(static_cast<Eigen::Index>(computational[i]));
    outside -= std::norm(c(static_cast<Eigen::Index>(i)));
  }
  if (outside > 1e-12) throw ConfigurationError("initial state leaves the computational subspace");
  return columns.at(k) * c;
}

namespace {

// Splits global snapshot times among segments (local clocks), always
// appending each segment's end.
std::vector<std::vector<double>> local_times(const GateSchedule& s, const std::vector<double>& global,
                                             std::vector<std::pair<std::size_t, std::size_t>>& where) {
  std::vector<std::vector<double>> out(s.segments.size());
  double start = 0.0;
  std::size_t gi = 0;
  for (std::size_t k = 0; k < s.segments.size(); ++k) {
    const double end = start + s.segments[k].duration;
    const bool last = k + 1 == s.segments.size();
    while (gi < global.size() && (global[gi] <= end || last)) {
      const double local = std::clamp(global[gi] - start, 0.0, s.segments[k].duration);
      out[k].push_back(local);
      where.emplace_back(k, out[k].size() - 1);
      ++gi;
    }
    out[k].push_back(s.segments[k].duration);
    start = end;
  }
  return out;
}

std::vector<double> sorted_times(const GateSchedule& s, const RunOptions& options) {
  std::vector<double> g = options.snapshot_times;
  if (!std::is_sorted(g.begin(), g.end())) throw ConfigurationError("snapshot times must be sorted");
  const double total = s.total_time();
  for (double t : g) {
    if (t < 0.0 || t > total * (1.0 + 1e-12)) throw ConfigurationError("snapshot time outside the schedule");
  }
  return g;
}

}  // namespace

ScheduleRun run_schedule(const GateSchedule& schedule, const NoiseOverride& noise, const RunOptions& options) {
  schedule.validate();
  const std::vector<double> global = sorted_times(schedule, options);
  std::vector<std::pair<std::size_t, std::size_t>> where;
  const auto local = local_times(schedule, global, where);

  ScheduleRun run;
  run.scheme = run_scheme(schedule, noise);
  run.computational = run.scheme.computational_indices();
  const auto n = static_cast<Eigen::Index>(run.scheme.dimension());
  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(n, static_cast<Eigen::Index>(run.computational.size()));
  for (std::size_t c = 0; c < run.computational.size(); ++c) {
    y(static_cast<Eigen::Index>(run.computational[c]), static_cast<Eigen::Index>(c)) = 1.0;
  }

  std::vector<std::vector<Eigen::MatrixXcd>> per_segment(schedule.segments.size());
  for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
    GateSegment seg = schedule.segments[k];
    apply_override(seg.params, seg.kind, noise);
    const auto h = segment_hamiltonian(seg);
    dynamics::EvolutionReport rep;
    per_segment[k] = dynamics::evolve_columns(h, y, 0.0, seg.duration, local[k], options.evolution, &rep);
    run.report.stats += rep.stats;
    run.report.periodic = run.report.periodic || rep.periodic;
    run.report.periods += rep.periods;
    y = per_segment[k].back();
  }
  for (std::size_t i = 0; i < global.size(); ++i) {
    run.times.push_back(global[i]);
    run.columns.push_back(per_segment[where[i].first][where[i].second]);
  }
  run.times.push_back(schedule.total_time());
  run.columns.push_back(y);

  if (options.evolution.check_invariants) {
    for (std::size_t k = 0; k < run.columns.size(); ++k) {
      const Eigen::MatrixXcd gram = run.columns[k].adjoint() * run.columns[k];
      const double dev = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
      if (!(dev <= options.evolution.unitarity_tolerance)) {
        throw InvariantViolation("schedule evolution lost unitarity by " + std::to_string(dev));
      }
    }
  }
  return run;
}

dynamics::DensityTrajectory run_schedule_lindblad(const GateSchedule& schedule, const dynamics::DensityMatrix& rho0,
                                                  const NoiseOverride& noise, const RunOptions& options) {
  schedule.validate();
  if (!noise.tau) throw ConfigurationError("Lindblad run needs a Rydberg lifetime");
  const dynamics::DecayModel decay{*noise.tau};
  const std::vector<double> global = sorted_times(schedule, options);
  std::vector<std::pair<std::size_t, std::size_t>> where;
  const auto local = local_times(schedule, global, where);

  dynamics::DensityTrajectory out;
  std::vector<std::vector<Eigen::MatrixXcd>> per_segment(schedule.segments.size());
  dynamics::DensityMatrix rho = rho0;
  for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
    GateSegment seg = schedule.segments[k];
    apply_override(seg.params, seg.kind, noise);
    const auto h = segment_hamiltonian(seg);
    auto tr = dynamics::integrate_lindblad(h, decay, rho, 0.0, seg.duration, local[k], options.evolution);
    out.report.stats += tr.report.stats;
    out.report.periodic = out.report.periodic || tr.report.periodic;
    out.report.periods += tr.report.periods;
    rho.rho = tr.states.back();
    per_segment[k] = std::move(tr.states);
  }
  for (std::size_t i = 0; i < global.size(); ++i) {
    out.times.push_back(global[i]);
    out.states.push_back(per_segment[where[i].first][where[i].second]);
  }
  out.times.push_back(schedule.total_time());
  out.states.push_back(rho.rho);
  return out;
}

}  // namespace ugsb::gates
