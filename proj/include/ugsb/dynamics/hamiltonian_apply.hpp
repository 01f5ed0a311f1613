#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ugsb/core/hamiltonian.hpp"

namespace ugsb::dynamics {

using cplx = std::complex<double>;

/// Evaluates out = (-i H(t) - diag(damping)) Y for a row-major n x m block Y,
/// streaming each coupling as a row update through the active kernel table.
class HamiltonianApplier {
 public:
  explicit HamiltonianApplier(const core::TimeDepHamiltonian& h, std::span<const double> damping = {});

  std::size_t dimension() const { return generator_diag_.size(); }
  double max_frequency() const { return max_frequency_; }
  /// max |diag| + sum of |coupling| entries; bounds the spectral radius.
  double scale() const { return scale_; }
  std::size_t entry_count() const { return entry_count_; }

  void apply(double t, const cplx* y, cplx* out, std::size_t m) const;

 private:
  struct Entry {
    std::size_t row, col;
    cplx value;
  };
  struct Term {
    double frequency;
    std::vector<Entry> entries;
  };
  std::vector<cplx> generator_diag_;
  std::vector<Term> terms_;
  double max_frequency_ = 0.0;
  double scale_ = 0.0;
  std::size_t entry_count_ = 0;
};

}  // namespace ugsb::dynamics
