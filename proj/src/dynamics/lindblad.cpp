#include "ugsb/dynamics/lindblad.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>

#include "linear_engine.hpp"
#include "ugsb/dynamics/hamiltonian_apply.hpp"
#include "ugsb/dynamics/periodic.hpp"
#include "ugsb/errors.hpp"

namespace ugsb::dynamics {

using RowBlock = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi, core::Frame frame) {
  return DensityMatrix{psi * psi.adjoint(), frame};
}

double DensityMatrix::trace_deviation() const { return std::abs(rho.trace() - cplx(1.0)); }

double DensityMatrix::hermiticity_deviation() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::check(double herm_tol, double trace_tol, double eig_tol) const {
  std::ostringstream msg;
  if (!(hermiticity_deviation() <= herm_tol)) msg << "density matrix not Hermitian; ";
  if (!(trace_deviation() <= trace_tol)) msg << "trace off by " << trace_deviation() << "; ";
  const double lo = min_eigenvalue();
  if (!(lo >= -eig_tol)) msg << "min eigenvalue " << lo << "; ";
  if (!msg.str().empty()) throw InvariantViolation(msg.str());
}

namespace {

// One collapse channel sqrt(g)|k>_j<r|: the kets it moves, as (src, dst) pairs.
struct Channel {
  double rate;
  std::vector<std::pair<std::size_t, std::size_t>> moves;
};

class LindbladOperator {
 public:
  LindbladOperator(const core::TimeDepHamiltonian& h, const DecayModel& decay)
      : n_(h.dimension()), applier_(h, damping(h, decay)) {
    if (!decay.active()) return;
    const auto& s = h.scheme();
    const std::pair<core::Level, double> targets[] = {
        {core::Level::q0, decay.gamma0()}, {core::Level::q1, decay.gamma1()}, {core::Level::leak, decay.gamma2()}};
    for (std::size_t atom = 0; atom < s.atom_count(); ++atom) {
      for (const auto& [level, rate] : targets) {
        Channel ch{rate, {}};
        for (std::size_t ket = 0; ket < n_; ++ket) {
          if (s.level_of(ket, atom) == core::Level::ryd) ch.moves.emplace_back(ket, s.with_level(ket, atom, level));
        }
        channels_.push_back(std::move(ch));
      }
    }
  }

  const HamiltonianApplier& applier() const { return applier_; }
  double column_cost() const {
    return static_cast<double>(n_) * (2.0 * static_cast<double>(applier_.entry_count()) + 3.0 * n_);
  }

  // Uses rho A^+ = (A rho)^+, so each block must be Hermitian.
  void rhs(double t, const cplx* x, cplx* dx, std::size_t batch) const {
    const std::size_t cols = n_ * batch;
    thread_local std::vector<cplx> y;
    y.resize(n_ * cols);
    applier_.apply(t, x, y.data(), cols);
    for (std::size_t b = 0; b < batch; ++b) {
      const std::size_t off = b * n_;
      for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
          dx[r * cols + off + c] = y[r * cols + off + c] + std::conj(y[c * cols + off + r]);
        }
      }
      for (const Channel& ch : channels_) {
        for (const auto& [sp, dp] : ch.moves) {
          for (const auto& [sq, dq] : ch.moves) {
            dx[dp * cols + off + dq] += ch.rate * x[sp * cols + off + sq];
          }
        }
      }
    }
  }

 private:
  static std::vector<double> damping(const core::TimeDepHamiltonian& h, const DecayModel& decay) {
    std::vector<double> g(h.dimension(), 0.0);
    if (!decay.active()) return g;
    const auto& s = h.scheme();
    if (!s.has_leak()) throw ConfigurationError("decay needs the leak level |2> in the basis");
    for (std::size_t ket = 0; ket < g.size(); ++ket) {
      for (std::size_t atom = 0; atom < s.atom_count(); ++atom) {
        if (s.level_of(ket, atom) == core::Level::ryd) g[ket] += 0.5 * decay.total();
      }
    }
    return g;
  }

  std::size_t n_;
  HamiltonianApplier applier_;
  std::vector<Channel> channels_;
};

// Batch layout: n x (n * batch) row-major, block b holding rho_b.
// Column layout: vec(rho) with index r * n + c.
// Columns E_aa, E_ab + E_ba and i(E_ab - E_ba) for a < b, in vec order r * n + c.
Eigen::MatrixXcd hermitian_basis(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(m * m, m * m);
  Eigen::Index col = 0;
  for (Eigen::Index a = 0; a < m; ++a) b(a * m + a, col++) = 1.0;
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index c = a + 1; c < m; ++c) {
      b(a * m + c, col) = 1.0;
      b(c * m + a, col++) = 1.0;
      b(a * m + c, col) = cplx(0.0, 1.0);
      b(c * m + a, col++) = cplx(0.0, -1.0);
    }
  }
  return b;
}

detail::LinearProblem make_problem(const LindbladOperator& op, std::size_t n) {
  detail::LinearProblem prob;
  prob.column_size = n * n;
  prob.rhs = [&op](double t, const cplx* x, cplx* dx, std::size_t batch) { op.rhs(t, x, dx, batch); };
  prob.to_columns = [n](const std::vector<cplx>& flat, std::size_t batch) {
    Eigen::MatrixXcd cols(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(batch));
    const std::size_t stride = n * batch;
    for (std::size_t b = 0; b < batch; ++b)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          cols(static_cast<Eigen::Index>(r * n + c), static_cast<Eigen::Index>(b)) = flat[r * stride + b * n + c];
    return cols;
  };
  prob.from_columns = [n](const Eigen::MatrixXcd& cols) {
    const auto batch = static_cast<std::size_t>(cols.cols());
    const std::size_t stride = n * batch;
    std::vector<cplx> flat(n * stride);
    for (std::size_t b = 0; b < batch; ++b)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          flat[r * stride + b * n + c] = cols(static_cast<Eigen::Index>(r * n + c), static_cast<Eigen::Index>(b));
    return flat;
  };
  prob.column_cost = op.column_cost();
  prob.period_basis = hermitian_basis(n);
  prob.max_frequency = op.applier().max_frequency();
  prob.scale = op.applier().scale();
  return prob;
}

Eigen::MatrixXcd unvec(const Eigen::MatrixXcd& cols, Eigen::Index b, std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd rho(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c) rho(r, c) = cols(r * m + c, b);
  return rho;
}

struct Prepared {
  std::optional<PeriodInfo> period;
  core::TimeDepHamiltonian h;
};

Prepared prepare(const core::TimeDepHamiltonian& h_in, const EvolutionOptions& options) {
  std::optional<PeriodInfo> period;
  if (options.acceleration != Acceleration::off) period = detect_period(h_in, options.max_denominator);
  return Prepared{period, period ? snap_to_period(h_in, *period) : h_in};
}

}  // namespace

DensityTrajectory integrate_lindblad(const core::TimeDepHamiltonian& h_in, const DecayModel& decay,
                                     const DensityMatrix& rho0, double t0, double t1,
                                     std::span<const double> snapshot_times, const EvolutionOptions& options) {
  const std::size_t n = h_in.dimension();
  if (static_cast<std::size_t>(rho0.rho.rows()) != n || static_cast<std::size_t>(rho0.rho.cols()) != n) {
    throw ConfigurationError("density matrix dimension does not match the Hamiltonian");
  }
  if (options.check_invariants) rho0.check();
  const Prepared prep = prepare(h_in, options);
  const LindbladOperator op(prep.h, decay);
  const detail::LinearProblem prob = make_problem(op, n);

  Eigen::MatrixXcd x0(static_cast<Eigen::Index>(n * n), 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      x0(static_cast<Eigen::Index>(r * n + c), 0) = rho0.rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));

  DensityTrajectory tr;
  auto cols = detail::run_linear(prob, x0, t0, t1, snapshot_times, options, prep.period, tr.report);
  tr.times.assign(snapshot_times.begin(), snapshot_times.end());
  if (tr.times.empty()) tr.times.push_back(t1);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    DensityMatrix dm{unvec(cols[k], 0, n), h_in.frame()};
    if (options.check_invariants) {
      const double lo = dm.min_eigenvalue();
      if (lo < -1e-6) {
        std::ostringstream msg;
        msg << "density matrix lost positivity (min eigenvalue " << lo << ") at t=" << tr.times[k]
            << "; tighten the integrator tolerances";
        throw IntegratorError(msg.str());
      }
      dm.check();
    }
    tr.states.push_back(std::move(dm.rho));
  }
  return tr;
}

std::vector<Eigen::MatrixXcd> lindblad_channel(const core::TimeDepHamiltonian& h_in, const DecayModel& decay,
                                               std::span<const std::size_t> subspace, double t0, double t1,
                                               const EvolutionOptions& options) {
  const std::size_t n = h_in.dimension();
  const Prepared prep = prepare(h_in, options);
  const LindbladOperator op(prep.h, decay);
  const detail::LinearProblem prob = make_problem(op, n);
  const std::size_t m = subspace.size();
  Eigen::MatrixXcd x0 = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(m * m));
  const auto at = [&](std::size_t a, std::size_t b) { return static_cast<Eigen::Index>(subspace[a] * n + subspace[b]); };
  const auto col = [&](std::size_t a, std::size_t b) { return static_cast<Eigen::Index>(a * m + b); };
  // Hermitian inputs only: slot (a, b) holds E_ab + E_ba and slot (b, a) holds i(E_ab - E_ba) for a < b.
  for (std::size_t a = 0; a < m; ++a) {
    x0(at(a, a), col(a, a)) = 1.0;
    for (std::size_t b = a + 1; b < m; ++b) {
      x0(at(a, b), col(a, b)) = 1.0;
      x0(at(b, a), col(a, b)) = 1.0;
      x0(at(a, b), col(b, a)) = cplx(0.0, 1.0);
      x0(at(b, a), col(b, a)) = cplx(0.0, -1.0);
    }
  }
  EvolutionReport report;
  const double times[] = {t1};
  auto cols = detail::run_linear(prob, x0, t0, t1, times, options, prep.period, report);
  std::vector<Eigen::MatrixXcd> out(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    out[col(a, a)] = unvec(cols[0], col(a, a), n);
    for (std::size_t b = a + 1; b < m; ++b) {
      const Eigen::MatrixXcd s = unvec(cols[0], col(a, b), n);
      const Eigen::MatrixXcd q = unvec(cols[0], col(b, a), n);
      out[col(a, b)] = 0.5 * (s - cplx(0.0, 1.0) * q);
      out[col(b, a)] = 0.5 * (s + cplx(0.0, 1.0) * q);
    }
  }
  return out;
}

}  // namespace ugsb::dynamics
