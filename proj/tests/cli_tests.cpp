// End-to-end tests of the apfree binary. Path to the tool comes in argv[1];
// every command runs through the shell with stdout/stderr captured to files.

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "apfree/oracle.hpp"
#include "apfree/report.hpp"
#include "apfree/setfile.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

#define EXPECT(cond)                                                     \
  do {                                                                   \
    if (!(cond)) {                                                       \
      ++failures;                                                        \
      std::cout << "FAILED " << __FILE__ << ":" << __LINE__ << ": "      \
                << #cond << "\n";                                        \
    }                                                                    \
  } while (0)

struct CommandResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string tool;
fs::path workdir;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

CommandResult run(const std::string& args) {
  const fs::path out = workdir / "stdout.txt";
  const fs::path err = workdir / "stderr.txt";
  const std::string cmd = "'" + tool + "' " + args + " > '" + out.string() +
                          "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  CommandResult res;
  res.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out);
  res.err = slurp(err);
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (const char c : text)
    if (c == '\n') ++n;
  return n;
}

void test_construct_roundtrip() {
  const fs::path f1 = workdir / "s1.txt";
  const fs::path f2 = workdir / "s2.txt";
  const fs::path f3 = workdir / "s3.txt";
  const std::string base =
      "construct --n 500 --trials 8 --seed 3 --out ";

  const CommandResult a = run(base + "'" + f1.string() + "'");
  EXPECT(a.code == 0);

  const auto j = nlohmann::json::parse(a.out);
  EXPECT(j.at("command") == "construct");
  EXPECT(j.at("n") == 500);
  EXPECT(j.at("seed") == 3);
  EXPECT(j.at("trials") == 8);
  EXPECT(j.at("size").get<std::int64_t>() >= 1);
  EXPECT(j.at("ap_count").get<std::int64_t>() >= 0);
  EXPECT(j.at("elkin_bound").get<double>() > j.at("behrend_bound").get<double>());

  const auto set = apfree::read_set_file(f1, 500);
  EXPECT(set.size() == j.at("size").get<std::int64_t>());

  // byte identity across repeat runs and across thread counts
  const CommandResult b = run(base + "'" + f2.string() + "'");
  EXPECT(b.code == 0);
  EXPECT(slurp(f1) == slurp(f2));
  const CommandResult c = run(base + "'" + f3.string() + "' --threads 3");
  EXPECT(c.code == 0);
  EXPECT(slurp(f1) == slurp(f3));

  const CommandResult v = run("verify '" + f1.string() + "' --n 500");
  EXPECT(v.code == 0);
  EXPECT(contains(v.out, "ok:"));
}

void test_construct_csv_report() {
  const CommandResult r =
      run("construct --n 200 --trials 4 --seed 9 --report csv");
  EXPECT(r.code == 0);
  const auto rep = apfree::RunReport::from_csv(r.out);
  EXPECT(rep.command == "construct");
  EXPECT(rep.n == 200);
  EXPECT(rep.trials == 4);
  EXPECT(rep.size >= 1);
  EXPECT(count_lines(r.out) == 2);
}

void test_construct_usage_errors() {
  EXPECT(run("construct").code == 2);                       // missing --n
  EXPECT(run("construct --n 0").code == 2);                 // not positive
  EXPECT(run("construct --n 20000000").code == 2);          // above the cap
  EXPECT(run("construct --n 100 --report xml").code == 2);  // bad format
  EXPECT(run("construct --n 100 --threads 0").code == 2);
  EXPECT(run("bogus-subcommand").code == 2);
  EXPECT(run("--help").code == 0);
  const CommandResult cap = run("construct --n 20000000");
  EXPECT(contains(cap.err, "at most"));
}

void test_verify_exit_codes() {
  const fs::path good = workdir / "good.txt";
  const fs::path bad = workdir / "bad.txt";
  const fs::path unsorted = workdir / "unsorted.txt";

  spit(good, "1\n2\n4\n5\n");
  CommandResult r = run("verify '" + good.string() + "'");
  EXPECT(r.code == 0);
  EXPECT(contains(r.out, "ok: 4 elements"));

  spit(bad, "1\n2\n3\n");
  r = run("verify '" + bad.string() + "'");
  EXPECT(r.code == 1);
  EXPECT(contains(r.out, "FAIL: 1 nontrivial"));
  EXPECT(contains(r.out, "1 2 3"));

  spit(unsorted, "2\n1\n");
  r = run("verify '" + unsorted.string() + "'");
  EXPECT(r.code == 2);
  EXPECT(contains(r.err, "unsorted"));

  spit(bad, "3\n9\n");
  r = run("verify '" + bad.string() + "' --n 5");
  EXPECT(r.code == 2);
  EXPECT(contains(r.err, "out-of-range"));

  r = run("verify '" + (workdir / "missing.txt").string() + "'");
  EXPECT(r.code == 2);
}

void test_oracle() {
  const CommandResult r = run("oracle --n 12");
  EXPECT(r.code == 0);
  EXPECT(contains(r.out, "r3 6"));
  EXPECT(contains(r.out, "status exact"));

  // printed witness matches the library's
  std::ostringstream witness;
  witness << "witness";
  for (const auto e : apfree::exact_r3(12).witness.elements)
    witness << ' ' << e;
  witness << '\n';
  EXPECT(contains(r.out, witness.str()));

  EXPECT(run("oracle --n 70").code == 2);
  EXPECT(run("oracle").code == 2);
}

void test_sweep() {
  const std::string args = "sweep --n-list 100,1000 --trials 8 --seed 2";
  const CommandResult a = run(args);
  EXPECT(a.code == 0);
  EXPECT(count_lines(a.out) == 3);  // header + one row per n
  EXPECT(contains(a.out, "N,d,delta,r,elkin_size,behrend_size,"
                         "behrend_bound,elkin_bound,elkin_ratio,"
                         "behrend_ratio"));
  EXPECT(contains(a.out, "\n100,"));
  EXPECT(contains(a.out, "\n1000,"));

  const CommandResult b = run(args);
  EXPECT(b.out == a.out);
  const CommandResult c = run(args + " --threads 2");
  EXPECT(c.out == a.out);

  EXPECT(run("sweep --n-list 100,abc").code == 2);
  EXPECT(run("sweep --n-list 4").code == 2);  // below the minimum
  EXPECT(run("sweep --n-list ''").code == 2);
}

void test_compare() {
  const CommandResult r = run("compare --n 30 --trials 16 --seed 1");
  EXPECT(r.code == 0);
  EXPECT(contains(r.out, "torus set"));
  EXPECT(contains(r.out, "digit-sphere set"));
  EXPECT(contains(r.out, "exact r3          12"));
}

void test_capped_sampling_warns() {
  // Forcing d high enough that the histogram budget saturates must warn on
  // stderr but still succeed.
  const CommandResult r =
      run("construct --n 100 --d-override 13 --trials 1 --seed 1");
  EXPECT(r.code == 0);
  EXPECT(contains(r.err, "capped"));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-apfree>\n";
    return 2;
  }
  tool = argv[1];
  workdir = fs::temp_directory_path() / "apfree-cli-tests";
  fs::remove_all(workdir);
  fs::create_directories(workdir);

  test_construct_roundtrip();
  test_construct_csv_report();
  test_construct_usage_errors();
  test_verify_exit_codes();
  test_oracle();
  test_sweep();
  test_compare();
  test_capped_sampling_warns();

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << failures << " check(s) failed\n";
  return 1;
}
