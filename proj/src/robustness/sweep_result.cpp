#include "ugsb/robustness/sweep_result.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <ostream>

#include "ugsb/dynamics/trajectory_io.hpp"
#include "ugsb/errors.hpp"

namespace ugsb::robustness {

std::size_t SweepResult::point_count() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.values.size();
  return n;
}

std::vector<std::size_t> SweepResult::coordinates(std::size_t p) const {
  std::vector<std::size_t> c(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    c[k] = p % axes[k].values.size();
    p /= axes[k].values.size();
  }
  return c;
}

void SweepResult::add_field(std::string field_name, std::vector<double> values) {
  field_names.push_back(std::move(field_name));
  fields.push_back(std::move(values));
}

const std::vector<double>& SweepResult::field(std::string_view field_name) const {
  for (std::size_t k = 0; k < field_names.size(); ++k) {
    if (field_names[k] == field_name) return fields[k];
  }
  throw ConfigurationError("sweep '" + name + "' has no field '" + std::string(field_name) + "'");
}

void SweepResult::validate() const {
  if (field_names.size() != fields.size()) throw InvariantViolation("sweep field names and arrays differ in count");
  const std::size_t n = point_count();
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (fields[k].size() != n) {
      throw InvariantViolation("field '" + field_names[k] + "' has " + std::to_string(fields[k].size()) +
                               " values for " + std::to_string(n) + " grid points");
    }
  }
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_hash(const nlohmann::json& config) { return fnv1a_hex(config.dump()); }

void write_csv(std::ostream& os, const SweepResult& r) {
  r.validate();
  os << "# sweep: " << r.name << '\n';
  os << "# seed: " << r.seed << '\n';
  os << "# samples: " << r.samples << '\n';
  os << "# params_hash: " << r.params_hash << '\n';
  for (const auto& a : r.axes) os << "# axis " << a.name << " [" << a.units << "]\n";
  for (std::size_t k = 0; k < r.axes.size(); ++k) os << (k ? "," : "") << r.axes[k].name;
  for (const auto& f : r.field_names) os << ',' << f;
  os << '\n';
  for (std::size_t p = 0; p < r.point_count(); ++p) {
    const auto c = r.coordinates(p);
    for (std::size_t k = 0; k < r.axes.size(); ++k) {
      os << (k ? "," : "") << dynamics::format_number(r.axes[k].values[c[k]]);
    }
    for (const auto& f : r.fields) os << ',' << dynamics::format_number(f[p]);
    os << '\n';
  }
}

nlohmann::json manifest(const SweepResult& r, std::string_view timestamp) {
  nlohmann::json j;
  j["sweep"] = r.name;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["params_hash"] = r.params_hash;
  j["params"] = r.params;
  j["fields"] = r.field_names;
  for (const auto& a : r.axes) j["axes"].push_back({{"name", a.name}, {"units", a.units}, {"values", a.values}});
  j["timestamp"] = timestamp;
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ugsb::robustness
