#include "ugsb/dynamics/hamiltonian_apply.hpp"

#include <algorithm>
#include <cmath>

#include "ugsb/errors.hpp"
#include "ugsb/kernels/kernels.hpp"

namespace ugsb::dynamics {

HamiltonianApplier::HamiltonianApplier(const core::TimeDepHamiltonian& h, std::span<const double> damping) {
  const std::size_t n = h.dimension();
  if (!damping.empty() && damping.size() != n) throw ConfigurationError("damping size mismatch");
  generator_diag_.resize(n);
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = damping.empty() ? 0.0 : damping[i];
    generator_diag_[i] = cplx(-g, -h.diagonal()[i]);
    max_diag = std::max(max_diag, std::abs(generator_diag_[i]));
  }
  double coupling_sum = 0.0;
  for (const auto& term : h.terms()) {
    Term t{term.frequency, {}};
    for (const auto& e : term.entries) {
      t.entries.push_back(Entry{e.row, e.col, e.value});
      coupling_sum += 2.0 * std::abs(e.value);
    }
    entry_count_ += t.entries.size();
    max_frequency_ = std::max(max_frequency_, std::abs(term.frequency));
    terms_.push_back(std::move(t));
  }
  scale_ = max_diag + coupling_sum;
}

void HamiltonianApplier::apply(double t, const cplx* y, cplx* out, std::size_t m) const {
  const auto& kt = kernels::active_kernels();
  const std::size_t n = generator_diag_.size();
  for (std::size_t r = 0; r < n; ++r) {
    const cplx g = generator_diag_[r];
    const cplx* yr = y + r * m;
    cplx* outr = out + r * m;
    for (std::size_t c = 0; c < m; ++c) outr[c] = g * yr[c];
  }
  const cplx minus_i(0.0, -1.0);
  for (const auto& term : terms_) {
    const cplx phase = term.frequency == 0.0 ? cplx(1.0) : std::polar(1.0, term.frequency * t);
    for (const auto& e : term.entries) {
      const cplx a = e.value * phase;
      kt.caxpy(out + e.row * m, minus_i * a, y + e.col * m, m);
      kt.caxpy(out + e.col * m, minus_i * std::conj(a), y + e.row * m, m);
    }
  }
}

}  // namespace ugsb::dynamics
