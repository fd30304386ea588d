#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "apfree/apcore.hpp"
#include "apfree/report.hpp"
#include "apfree/setfile.hpp"

using namespace apfree;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "apfree-io-tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("set file round-trip") {
  const auto path = temp_file("roundtrip.txt");
  const CandidateSet s =
      CandidateSet::from_elements(50, {1, 4, 10, 28, 49});
  write_set_file(path, s, {"n = 50", "demo"});

  const CandidateSet back = read_set_file(path);
  CHECK(back.elements == s.elements);
  CHECK(back.n_limit == 49);  // inferred from the largest element

  const CandidateSet bounded = read_set_file(path, 50);
  CHECK(bounded.n_limit == 50);
  CHECK(bounded.elements == s.elements);

  const std::string text = read_text(path);
  CHECK(text.find("# n = 50\n") != std::string::npos);
  CHECK(text.find("# demo\n") != std::string::npos);

  // writing again produces identical bytes
  write_set_file(path, s, {"n = 50", "demo"});
  CHECK(read_text(path) == text);
}

TEST_CASE("set file accepts comments, blank lines, CRLF") {
  const auto path = temp_file("formats.txt");
  write_text(path, "# header\r\n3\r\n\r\n# middle\n7\n12\n");
  const CandidateSet s = read_set_file(path);
  CHECK(s.elements == std::vector<std::int64_t>{3, 7, 12});
}

TEST_CASE("empty set file") {
  const auto path = temp_file("empty.txt");
  write_text(path, "# nothing here\n");
  const CandidateSet s = read_set_file(path);
  CHECK(s.size() == 0);
  CHECK(s.n_limit >= 1);
}

TEST_CASE("set file error kinds") {
  auto kind_of = [](const fs::path& p,
                    std::optional<std::int64_t> n = {}) {
    try {
      read_set_file(p, n);
    } catch (const SetFileError& e) {
      return e.kind;
    }
    throw std::runtime_error("expected a SetFileError");
  };

  const auto path = temp_file("bad.txt");

  write_text(path, "2\n1\n");
  CHECK(kind_of(path) == SetFileError::Kind::Unsorted);
  write_text(path, "2\n2\n");
  CHECK(kind_of(path) == SetFileError::Kind::Duplicate);
  write_text(path, "0\n");
  CHECK(kind_of(path) == SetFileError::Kind::OutOfRange);
  write_text(path, "-4\n");
  CHECK(kind_of(path) == SetFileError::Kind::OutOfRange);
  write_text(path, "1\n7\n");
  CHECK(kind_of(path, 5) == SetFileError::Kind::OutOfRange);
  write_text(path, "abc\n");
  CHECK(kind_of(path) == SetFileError::Kind::Malformed);
  write_text(path, "12x\n");
  CHECK(kind_of(path) == SetFileError::Kind::Malformed);
  write_text(path, "1 2\n");
  CHECK(kind_of(path) == SetFileError::Kind::Malformed);
  CHECK(kind_of(temp_file("does-not-exist.txt")) == SetFileError::Kind::Io);

  // messages name the problem so CLI users see it verbatim
  write_text(path, "2\n1\n");
  try {
    read_set_file(path);
    CHECK(false);
  } catch (const SetFileError& e) {
    CHECK(std::string(e.what()).find("unsorted") != std::string::npos);
  }
}

TEST_CASE("run report JSON round-trip") {
  RunReport r;
  r.command = "construct";
  r.n = 1000000;
  r.d = 7;
  r.delta = 0.019541874011871952;
  r.r = 0.7621330902809124;
  r.seed = 12345;
  r.trials = 64;
  r.c_delta = 1.0 / 3.0;
  r.threads = 4;
  r.raw_size = 1021;
  r.ap_count = 1237;
  r.size = 1001;
  r.elapsed_ms = 4312;
  r.vol_mean = 1.0e-17;
  r.vol_std_error = 3.5e-9;
  r.vol_samples = 8000000;
  r.behrend_bound_value = 57.13;
  r.elkin_bound_value = 212.4;
  r.size_floor_value = 0.1;
  r.shape_term = 48.25;

  const RunReport back = RunReport::from_json(r.to_json());
  CHECK(back == r);
}

TEST_CASE("run report CSV round-trip") {
  RunReport r;
  r.command = "sweep";
  r.n = 65536;
  r.d = 6;
  r.delta = 0.1 - 1e-4;
  r.r = 0.55;
  r.seed = 1;
  r.trials = 8;
  r.c_delta = 1.0;
  r.threads = 1;
  r.size = 77;
  r.vol_mean = 0.1234567890123456789;  // rounds to nearest double
  r.behrend_bound_value = 3.0000000000000004;

  const std::string csv = r.to_csv();
  const RunReport back = RunReport::from_csv(csv);
  CHECK(back == r);

  // two lines, fixed header
  std::istringstream lines(csv);
  std::string header, values, extra;
  CHECK(std::getline(lines, header));
  CHECK(std::getline(lines, values));
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(header.rfind("command,n,d,delta,r,seed,", 0) == 0);
}

TEST_CASE("doubles format with round-trip precision") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  for (double v : {1.0 / 3.0, 2.5e-13, 7.00000001e22, 0.1 - 1e-4}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}
