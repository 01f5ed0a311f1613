#include "ugsb/core/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "ugsb/errors.hpp"

namespace ugsb::core {

TimeDepHamiltonian::TimeDepHamiltonian(LevelScheme scheme, Frame frame)
    : scheme_(std::move(scheme)), frame_(frame), diagonal_(scheme_.dimension(), 0.0) {}

void TimeDepHamiltonian::add_diagonal(std::size_t index, double value) {
  if (index >= dimension()) throw ConfigurationError("diagonal index out of range");
  diagonal_[index] += value;
}

void TimeDepHamiltonian::add_coupling(std::size_t row, std::size_t col, cplx value, double frequency) {
  if (row >= dimension() || col >= dimension()) throw ConfigurationError("coupling index out of range");
  if (row == col) throw ConfigurationError("coupling must be off-diagonal");
  if (value == cplx{}) return;
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const OscillatingTerm& t) { return t.frequency == frequency; });
  if (it == terms_.end()) {
    terms_.push_back(OscillatingTerm{frequency, {}});
    it = terms_.end() - 1;
  }
  it->entries.push_back(MatrixEntry{row, col, value});
}

std::size_t TimeDepHamiltonian::entry_count() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n += t.entries.size();
  return n;
}

Eigen::MatrixXcd TimeDepHamiltonian::evaluate(double t) const {
  const auto n = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = diagonal_[static_cast<std::size_t>(i)];
  for (const auto& term : terms_) {
    const cplx phase = std::polar(1.0, term.frequency * t);
    for (const auto& e : term.entries) {
      const cplx v = e.value * phase;
      h(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += v;
      h(static_cast<Eigen::Index>(e.col), static_cast<Eigen::Index>(e.row)) += std::conj(v);
    }
  }
  return h;
}

double TimeDepHamiltonian::max_frequency() const {
  double w = 0.0;
  for (const auto& t : terms_) w = std::max(w, std::abs(t.frequency));
  return w;
}

TimeDepHamiltonian TimeDepHamiltonian::rotated(double energy, std::span<const double> weights,
                                               Frame tag) const {
  if (weights.size() != dimension()) throw ConfigurationError("projector size mismatch");
  TimeDepHamiltonian out(scheme_, tag);
  for (std::size_t i = 0; i < dimension(); ++i) out.diagonal_[i] = diagonal_[i] - energy * weights[i];
  for (const auto& term : terms_) {
    for (const auto& e : term.entries) {
      out.add_coupling(e.row, e.col, e.value,
                       term.frequency + energy * (weights[e.row] - weights[e.col]));
    }
  }
  return out;
}

}  // namespace ugsb::core
