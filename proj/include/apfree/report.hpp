#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace apfree {

// Flat run summary, serializable as JSON or a two-line CSV. Doubles render
// with enough digits to round-trip exactly, so a reparsed report compares
// equal field for field.
struct RunReport {
  std::string command;
  std::int64_t n = 0;
  int d = 0;
  double delta = 0.0;
  double r = 0.0;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  double c_delta = 1.0;
  int threads = 1;
  std::int64_t raw_size = 0;
  std::uint64_t ap_count = 0;
  std::int64_t size = 0;
  std::int64_t elapsed_ms = 0;
  double vol_mean = 0.0;
  double vol_std_error = 0.0;
  std::int64_t vol_samples = 0;
  double behrend_bound_value = 0.0;
  double elkin_bound_value = 0.0;
  double size_floor_value = 0.0;
  double shape_term = 0.0;

  bool operator==(const RunReport&) const = default;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);

  std::string to_csv() const;  // header line + value line
  static RunReport from_csv(const std::string& text);
};

// Shortest-round-trip decimal rendering for CSV cells.
std::string format_double(double v);

}  // namespace apfree
