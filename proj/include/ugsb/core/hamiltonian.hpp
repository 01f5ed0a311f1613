#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ugsb/core/level_scheme.hpp"

namespace ugsb::core {

using cplx = std::complex<double>;

enum class Frame { interaction, v_rotated, v0_rotated };

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  cplx value;
};

/// sum_entries value * e^{i w t} |row><col| + H.c.
struct OscillatingTerm {
  double frequency = 0.0;
  std::vector<MatrixEntry> entries;
};

/// H(t) = diag(d) + sum_k [M_k e^{i w_k t} + H.c.]
class TimeDepHamiltonian {
 public:
  explicit TimeDepHamiltonian(LevelScheme scheme, Frame frame = Frame::interaction);

  const LevelScheme& scheme() const { return scheme_; }
  std::size_t dimension() const { return diagonal_.size(); }
  Frame frame() const { return frame_; }

  void add_diagonal(std::size_t index, double value);
  /// Adds value * e^{i w t}|row><col| + H.c.; row == col is rejected.
  void add_coupling(std::size_t row, std::size_t col, cplx value, double frequency);

  const std::vector<double>& diagonal() const { return diagonal_; }
  const std::vector<OscillatingTerm>& terms() const { return terms_; }
  std::size_t entry_count() const;

  Eigen::MatrixXcd evaluate(double t) const;
  double max_frequency() const;
  bool has_couplings() const { return !terms_.empty(); }

  /// Same dynamics seen in the frame U = exp(i t E P) with P = diag(weights):
  /// coupling frequencies gain E (p_row - p_col), the diagonal loses E p.
  TimeDepHamiltonian rotated(double energy, std::span<const double> weights, Frame tag) const;

 private:
  LevelScheme scheme_;
  Frame frame_;
  std::vector<double> diagonal_;
  std::vector<OscillatingTerm> terms_;
};

}  // namespace ugsb::core
