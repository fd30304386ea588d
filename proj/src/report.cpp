#include "apfree/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace apfree {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

const std::vector<const char*> kColumns = {
    "command",       "n",           "d",
    "delta",         "r",           "seed",
    "trials",        "c_delta",     "threads",
    "raw_size",      "ap_count",    "size",
    "elapsed_ms",    "vol_mean",    "vol_std_error",
    "vol_samples",   "behrend_bound", "elkin_bound",
    "size_floor",    "shape_term"};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  return nlohmann::json{{"command", command},
                        {"n", n},
                        {"d", d},
                        {"delta", delta},
                        {"r", r},
                        {"seed", seed},
                        {"trials", trials},
                        {"c_delta", c_delta},
                        {"threads", threads},
                        {"raw_size", raw_size},
                        {"ap_count", ap_count},
                        {"size", size},
                        {"elapsed_ms", elapsed_ms},
                        {"vol_mean", vol_mean},
                        {"vol_std_error", vol_std_error},
                        {"vol_samples", vol_samples},
                        {"behrend_bound", behrend_bound_value},
                        {"elkin_bound", elkin_bound_value},
                        {"size_floor", size_floor_value},
                        {"shape_term", shape_term}};
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.n = j.at("n").get<std::int64_t>();
  r.d = j.at("d").get<int>();
  r.delta = j.at("delta").get<double>();
  r.r = j.at("r").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trials = j.at("trials").get<std::int64_t>();
  r.c_delta = j.at("c_delta").get<double>();
  r.threads = j.at("threads").get<int>();
  r.raw_size = j.at("raw_size").get<std::int64_t>();
  r.ap_count = j.at("ap_count").get<std::uint64_t>();
  r.size = j.at("size").get<std::int64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  r.vol_mean = j.at("vol_mean").get<double>();
  r.vol_std_error = j.at("vol_std_error").get<double>();
  r.vol_samples = j.at("vol_samples").get<std::int64_t>();
  r.behrend_bound_value = j.at("behrend_bound").get<double>();
  r.elkin_bound_value = j.at("elkin_bound").get<double>();
  r.size_floor_value = j.at("size_floor").get<double>();
  r.shape_term = j.at("shape_term").get<double>();
  return r;
}

std::string RunReport::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < kColumns.size(); ++i)
    out << kColumns[i] << (i + 1 < kColumns.size() ? "," : "\n");
  out << command << ',' << n << ',' << d << ',' << format_double(delta) << ','
      << format_double(r) << ',' << seed << ',' << trials << ','
      << format_double(c_delta) << ',' << threads << ',' << raw_size << ','
      << ap_count << ',' << size << ',' << elapsed_ms << ','
      << format_double(vol_mean) << ',' << format_double(vol_std_error) << ','
      << vol_samples << ',' << format_double(behrend_bound_value) << ','
      << format_double(elkin_bound_value) << ','
      << format_double(size_floor_value) << ',' << format_double(shape_term)
      << "\n";
  return out.str();
}

RunReport RunReport::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string header, values;
  if (!std::getline(in, header) || !std::getline(in, values))
    throw std::invalid_argument("RunReport::from_csv: need header and value lines");

  const auto names = split_csv_line(header);
  const auto cells = split_csv_line(values);
  if (names.size() != kColumns.size() || cells.size() != kColumns.size())
    throw std::invalid_argument("RunReport::from_csv: column count mismatch");
  for (std::size_t i = 0; i < kColumns.size(); ++i)
    if (names[i] != kColumns[i])
      throw std::invalid_argument("RunReport::from_csv: unexpected column " +
                                  names[i]);

  RunReport r;
  std::size_t i = 0;
  r.command = cells[i++];
  r.n = std::stoll(cells[i++]);
  r.d = std::stoi(cells[i++]);
  r.delta = std::stod(cells[i++]);
  r.r = std::stod(cells[i++]);
  r.seed = std::stoull(cells[i++]);
  r.trials = std::stoll(cells[i++]);
  r.c_delta = std::stod(cells[i++]);
  r.threads = std::stoi(cells[i++]);
  r.raw_size = std::stoll(cells[i++]);
  r.ap_count = std::stoull(cells[i++]);
  r.size = std::stoll(cells[i++]);
  r.elapsed_ms = std::stoll(cells[i++]);
  r.vol_mean = std::stod(cells[i++]);
  r.vol_std_error = std::stod(cells[i++]);
  r.vol_samples = std::stoll(cells[i++]);
  r.behrend_bound_value = std::stod(cells[i++]);
  r.elkin_bound_value = std::stod(cells[i++]);
  r.size_floor_value = std::stod(cells[i++]);
  r.shape_term = std::stod(cells[i++]);
  return r;
}

}  // namespace apfree
