#include "ugsb/core/level_scheme.hpp"

#include <algorithm>

#include "ugsb/errors.hpp"

namespace ugsb::core {

char level_symbol(Level level) {
  switch (level) {
    case Level::q0: return '0';
    case Level::q1: return '1';
    case Level::ryd: return 'r';
    case Level::leak: return '2';
    case Level::aux_e: return 'e';
  }
  return '?';
}

std::string_view level_name(Level level) {
  switch (level) {
    case Level::q0: return "q0";
    case Level::q1: return "q1";
    case Level::ryd: return "ryd";
    case Level::leak: return "leak";
    case Level::aux_e: return "aux_e";
  }
  return "?";
}

LevelScheme::LevelScheme(std::size_t atom_count, bool with_leak, bool with_aux)
    : atom_count_(atom_count), levels_{Level::q0, Level::q1, Level::ryd} {
  if (atom_count == 0 || atom_count > 3) {
    throw ConfigurationError("LevelScheme supports 1 to 3 atoms, got " +
                             std::to_string(atom_count));
  }
  if (with_leak) levels_.push_back(Level::leak);
  if (with_aux) levels_.push_back(Level::aux_e);
  strides_.assign(atom_count_, 1);
  dimension_ = 1;
  for (std::size_t a = atom_count_; a-- > 0;) {
    strides_[a] = dimension_;
    dimension_ *= levels_.size();
  }
}

bool LevelScheme::has(Level level) const {
  return std::find(levels_.begin(), levels_.end(), level) != levels_.end();
}

std::size_t LevelScheme::local_index(Level level) const {
  const auto it = std::find(levels_.begin(), levels_.end(), level);
  if (it == levels_.end()) {
    throw ConfigurationError("level " + std::string(level_name(level)) + " not in scheme");
  }
  return static_cast<std::size_t>(it - levels_.begin());
}

std::size_t LevelScheme::index(std::span<const Level> ket) const {
  if (ket.size() != atom_count_) {
    throw ConfigurationError("ket has " + std::to_string(ket.size()) + " atoms, scheme has " +
                             std::to_string(atom_count_));
  }
  std::size_t idx = 0;
  for (std::size_t a = 0; a < atom_count_; ++a) idx += local_index(ket[a]) * strides_[a];
  return idx;
}

std::vector<Level> LevelScheme::decode(std::size_t index) const {
  if (index >= dimension_) throw ConfigurationError("basis index out of range");
  std::vector<Level> ket(atom_count_);
  for (std::size_t a = 0; a < atom_count_; ++a) ket[a] = level_of(index, a);
  return ket;
}

Level LevelScheme::level_of(std::size_t index, std::size_t atom) const {
  return levels_[(index / strides_[atom]) % levels_.size()];
}

std::size_t LevelScheme::with_level(std::size_t index, std::size_t atom, Level level) const {
  const std::size_t current = (index / strides_[atom]) % levels_.size();
  return index - current * strides_[atom] + local_index(level) * strides_[atom];
}

std::string LevelScheme::label(std::size_t index) const {
  std::string s;
  for (std::size_t a = 0; a < atom_count_; ++a) s.push_back(level_symbol(level_of(index, a)));
  return s;
}

std::size_t LevelScheme::index_of_label(std::string_view label) const {
  if (label.size() != atom_count_) throw ConfigurationError("bad ket label '" + std::string(label) + "'");
  std::vector<Level> ket;
  for (char ch : label) {
    bool found = false;
    for (Level l : levels_) {
      if (level_symbol(l) == ch) {
        ket.push_back(l);
        found = true;
        break;
      }
    }
    if (!found) throw ConfigurationError("bad ket label '" + std::string(label) + "'");
  }
  return index(ket);
}

std::vector<std::size_t> LevelScheme::computational_indices() const {
  const std::size_t count = std::size_t{1} << atom_count_;
  std::vector<std::size_t> out;
  out.reserve(count);
  std::vector<Level> ket(atom_count_);
  for (std::size_t bits = 0; bits < count; ++bits) {
    for (std::size_t a = 0; a < atom_count_; ++a) {
      ket[a] = ((bits >> (atom_count_ - 1 - a)) & 1U) ? Level::q1 : Level::q0;
    }
    out.push_back(index(ket));
  }
  return out;
}

}  // namespace ugsb::core
