#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ugsb::robustness {

struct Axis {
  std::string name;
  std::string units;
  std::vector<double> values;
};

/// Scalar fields on the product grid of the axes, first axis slowest.
/// Points that could not be evaluated hold NaN.
struct SweepResult {
  std::string name;
  std::vector<Axis> axes;
  std::vector<std::string> field_names;
  std::vector<std::vector<double>> fields;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string params_hash;
  nlohmann::json params;

  std::size_t point_count() const;
  /// Grid coordinates of flat point p.
  std::vector<std::size_t> coordinates(std::size_t p) const;
  void add_field(std::string name, std::vector<double> values);
  const std::vector<double>& field(std::string_view name) const;
  /// Throws InvariantViolation when a field length differs from the axis product.
  void validate() const;
};

/// FNV-1a 64-bit, as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

/// Hash of the compact JSON text.
std::string config_hash(const nlohmann::json& config);

/// '#' header (name, seed, samples, hash, units) then one row per point.
void write_csv(std::ostream& os, const SweepResult& result);

/// Axes, seed, samples, params and hash; `timestamp` is the only field that
/// varies between identical runs.
nlohmann::json manifest(const SweepResult& result, std::string_view timestamp);

/// UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace ugsb::robustness
