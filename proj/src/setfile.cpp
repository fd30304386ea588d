#include "apfree/setfile.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace apfree {

void write_set_file(const std::filesystem::path& path, const CandidateSet& s,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw SetFileError(SetFileError::Kind::Io,
                       "cannot open for writing: " + path.string());
  for (const auto& line : comments) out << "# " << line << '\n';
  for (const auto e : s.elements) out << e << '\n';
  out.flush();
  if (!out)
    throw SetFileError(SetFileError::Kind::Io,
                       "write failed: " + path.string());
}

CandidateSet read_set_file(const std::filesystem::path& path,
                           std::optional<std::int64_t> n_limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw SetFileError(SetFileError::Kind::Io,
                       "cannot open: " + path.string());

  std::vector<std::int64_t> elems;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size())
      throw SetFileError(SetFileError::Kind::Malformed,
                         "line " + std::to_string(lineno) +
                             ": not an integer: '" + line + "'");
    if (value < 1)
      throw SetFileError(SetFileError::Kind::OutOfRange,
                         "line " + std::to_string(lineno) +
                             ": out-of-range element, must be at least 1");
    if (n_limit && value > *n_limit)
      throw SetFileError(SetFileError::Kind::OutOfRange,
                         "line " + std::to_string(lineno) +
                             ": out-of-range element, exceeds n = " +
                             std::to_string(*n_limit));
    if (!elems.empty()) {
      if (value == elems.back())
        throw SetFileError(SetFileError::Kind::Duplicate,
                           "line " + std::to_string(lineno) +
                               ": duplicate element " + std::to_string(value));
      if (value < elems.back())
        throw SetFileError(SetFileError::Kind::Unsorted,
                           "line " + std::to_string(lineno) +
                               ": unsorted, elements must be strictly increasing");
    }
    elems.push_back(value);
  }

  const std::int64_t limit =
      n_limit ? *n_limit : (elems.empty() ? 1 : elems.back());
  return CandidateSet::from_elements(limit, std::move(elems));
}

}  // namespace apfree
