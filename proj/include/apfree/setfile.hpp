#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apfree/apcore.hpp"

namespace apfree {

// Set files: '#' comment lines, then one element per line, strictly
// increasing. Writes are byte-deterministic (no timestamps, fixed float
// formatting in comments).
struct SetFileError : std::runtime_error {
  enum class Kind { Io, Malformed, Unsorted, Duplicate, OutOfRange };
  Kind kind;

  SetFileError(Kind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

void write_set_file(const std::filesystem::path& path, const CandidateSet& s,
                    const std::vector<std::string>& comments);

// n_limit taken from the argument when given (elements above it are
// out-of-range), otherwise from the largest element.
CandidateSet read_set_file(const std::filesystem::path& path,
                           std::optional<std::int64_t> n_limit = {});

}  // namespace apfree
