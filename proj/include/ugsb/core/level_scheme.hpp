#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ugsb::core {

/// Per-atom levels. Declaration order is the local index order.
enum class Level : std::uint8_t { q0, q1, ryd, leak, aux_e };

char level_symbol(Level level);
std::string_view level_name(Level level);

/// Tensor-product basis of identical multi-level atoms.
///
/// Local levels are ordered q0, q1, ryd[, leak][, aux_e]. Kets are indexed
/// with atom 0 (the first listed, e.g. atom 1 of a pair or the control atom
/// of a Fredkin register) varying slowest:
///   index = sum_a local(level_a) * L^(atom_count - 1 - a)
class LevelScheme {
 public:
  LevelScheme() : LevelScheme(2, false, false) {}
  LevelScheme(std::size_t atom_count, bool with_leak, bool with_aux);

  std::size_t atom_count() const { return atom_count_; }
  std::size_t levels_per_atom() const { return levels_.size(); }
  std::size_t dimension() const { return dimension_; }
  std::span<const Level> levels() const { return levels_; }

  bool has(Level level) const;
  bool has_leak() const { return has(Level::leak); }
  bool has_aux() const { return has(Level::aux_e); }

  /// Position of a level in the per-atom ordering; throws ConfigurationError if absent.
  std::size_t local_index(Level level) const;

  std::size_t index(std::span<const Level> ket) const;
  std::vector<Level> decode(std::size_t index) const;

  Level level_of(std::size_t index, std::size_t atom) const;
  /// Same ket with one atom moved to another level.
  std::size_t with_level(std::size_t index, std::size_t atom, Level level) const;

  /// e.g. "0r1"
  std::string label(std::size_t index) const;
  std::size_t index_of_label(std::string_view label) const;

  /// Kets with every atom in q0/q1, in binary order (00, 01, 10, 11, ...).
  std::vector<std::size_t> computational_indices() const;

  bool operator==(const LevelScheme&) const = default;

 private:
  std::size_t atom_count_;
  std::vector<Level> levels_;
  std::size_t dimension_;
  std::vector<std::size_t> strides_;
};

}  // namespace ugsb::core
