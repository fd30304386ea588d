// apfree: construct, verify and compare progression-free subsets of {1..n}.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 internal invariant breach.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apfree/behrend.hpp"
#include "apfree/bounds.hpp"
#include "apfree/elkin.hpp"
#include "apfree/oracle.hpp"
#include "apfree/report.hpp"
#include "apfree/setfile.hpp"

namespace {

constexpr std::int64_t kMaxN = 10'000'000;

struct ConstructOptions {
  std::int64_t n = 0;
  std::int64_t trials = 64;
  std::uint64_t seed = 1;
  double c_delta = 1.0;
  int d_override = 0;
  int threads = 1;
  std::string out_path;
  std::string report_format = "json";
};

apfree::ConstructionParams make_params(const ConstructOptions& opt) {
  if (opt.d_override > 0)
    return apfree::derive_params_with_d(opt.n, opt.d_override, opt.c_delta,
                                        opt.trials, opt.seed);
  return apfree::derive_params(opt.n, opt.c_delta, opt.trials, opt.seed);
}

void warn_if_capped(const apfree::ConstructionParams& params) {
  if (apfree::radius_samples_capped(params.d, params.delta))
    std::cerr << "warning: radius histogram sample budget capped at 8e6; "
                 "bin resolution may be coarse for d = "
              << params.d << "\n";
}

apfree::RunReport build_report(const apfree::ConstructionParams& params,
                               const apfree::ConstructionResult& result,
                               const ConstructOptions& opt,
                               std::int64_t elapsed_ms) {
  apfree::RunReport rep;
  rep.command = "construct";
  rep.n = params.n_limit;
  rep.d = params.d;
  rep.delta = params.delta;
  rep.r = params.spec.r;
  rep.seed = params.master_seed;
  rep.trials = params.trials;
  rep.c_delta = params.c_delta;
  rep.threads = opt.threads;
  rep.raw_size = result.best.raw_size;
  rep.ap_count = result.best.ap_count;
  rep.size = result.set.size();
  rep.elapsed_ms = elapsed_ms;

  const auto vol = apfree::estimate_annulus_volume(
      params.spec, apfree::radius_sample_rule(params.d, params.delta),
      params.master_seed);
  rep.vol_mean = vol.mean;
  rep.vol_std_error = vol.std_error;
  rep.vol_samples = vol.samples;

  rep.behrend_bound_value = apfree::behrend_bound(params.n_limit);
  rep.elkin_bound_value = apfree::elkin_bound(params.n_limit);
  const auto floor = apfree::size_floor(params.n_limit, params.d, vol.mean);
  rep.size_floor_value = floor.floor;
  rep.shape_term = floor.shape_term;
  return rep;
}

std::vector<std::string> set_file_comments(
    const apfree::ConstructionParams& params,
    const apfree::ConstructionResult& result, int threads) {
  (void)threads;  // excluded: files must be byte-identical across thread counts
  std::ostringstream meta;
  meta << "construct n=" << params.n_limit << " d=" << params.d
       << " delta=" << apfree::format_double(params.delta)
       << " r=" << apfree::format_double(params.spec.r)
       << " seed=" << params.master_seed << " trials=" << params.trials
       << " c_delta=" << apfree::format_double(params.c_delta);
  std::ostringstream best;
  best << "best trial=" << result.best.trial_index
       << " raw=" << result.best.raw_size << " aps=" << result.best.ap_count
       << " final=" << result.best.final_size;
  return {"progression-free subset of {1.." + std::to_string(params.n_limit) +
              "}",
          meta.str(), best.str()};
}

int cmd_construct(const ConstructOptions& opt) {
  if (opt.n > kMaxN) {
    std::cerr << "error: n must be at most " << kMaxN << "\n";
    return 2;
  }
  const auto params = make_params(opt);
  warn_if_capped(params);

  const auto t0 = std::chrono::steady_clock::now();
  const auto result = apfree::construct_detailed(params, opt.threads);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

  const auto rep = build_report(params, result, opt, elapsed);
  if (!opt.out_path.empty())
    apfree::write_set_file(opt.out_path, result.set,
                           set_file_comments(params, result, opt.threads));

  if (opt.report_format == "csv")
    std::cout << rep.to_csv();
  else
    std::cout << rep.to_json().dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, std::optional<std::int64_t> n) {
  auto set = apfree::read_set_file(path, n);
  const auto count = apfree::count_3aps(set);
  if (count == 0) {
    std::cout << "ok: " << set.size()
              << " elements, no nontrivial 3-term progression\n";
    return 0;
  }
  const auto examples = apfree::enumerate_3aps(set, 3);
  std::cout << "FAIL: " << count << " nontrivial 3-term progression"
            << (count == 1 ? "" : "s") << " found\n";
  for (const auto& t : examples)
    std::cout << "  " << t.a << " " << t.b << " " << t.c << "\n";
  return 1;
}

int cmd_oracle(std::int64_t n, std::uint64_t budget) {
  const auto res = apfree::exact_r3(n, budget);
  std::cout << "n " << res.n_limit << "\n";
  std::cout << "r3 " << res.r3
            << (res.status == apfree::OracleStatus::Exact ? ""
                                                          : " (lower bound)")
            << "\n";
  std::cout << "status "
            << (res.status == apfree::OracleStatus::Exact ? "exact"
                                                          : "budget-exhausted")
            << "\n";
  std::cout << "nodes " << res.nodes_explored << "\n";
  std::cout << "witness";
  for (const auto e : res.witness.elements) std::cout << ' ' << e;
  std::cout << "\n";
  return 0;
}

int cmd_compare(std::int64_t n, std::int64_t trials, std::uint64_t seed,
                double c_delta, int threads) {
  if (n > kMaxN) {
    std::cerr << "error: n must be at most " << kMaxN << "\n";
    return 2;
  }
  const auto params = apfree::derive_params(n, c_delta, trials, seed);
  warn_if_capped(params);
  const auto elkin = apfree::construct_detailed(params, threads);
  const auto behrend = apfree::behrend_construct_detailed(n);

  std::cout << "n                 " << n << "\n";
  std::cout << "annulus           d=" << params.d
            << " delta=" << apfree::format_double(params.delta)
            << " r=" << apfree::format_double(params.spec.r) << "\n";
  std::cout << "torus set         " << elkin.set.size() << " (raw "
            << elkin.best.raw_size << ", deleted "
            << elkin.best.raw_size - elkin.set.size() << ")\n";
  std::cout << "digit-sphere set  " << behrend.set.size() << " (base "
            << behrend.params.base << ", digits " << behrend.params.digits
            << ", shell " << behrend.params.shell << ")\n";
  std::cout << "behrend bound     "
            << apfree::format_double(apfree::behrend_bound(n)) << "\n";
  std::cout << "elkin bound       "
            << apfree::format_double(apfree::elkin_bound(n)) << "\n";
  if (n <= 40) {
    const auto oracle = apfree::exact_r3(n);
    std::cout << "exact r3          " << oracle.r3 << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& n_list, std::int64_t trials,
              std::uint64_t seed, double c_delta, int threads) {
  std::vector<std::int64_t> ns;
  std::istringstream in(n_list);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const std::int64_t v = std::stoll(token, &used);
      if (used != token.size() || v < 8 || v > kMaxN)
        throw std::invalid_argument(token);
      ns.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: bad n-list entry '" << token << "'\n";
      return 2;
    }
  }
  if (ns.empty()) {
    std::cerr << "error: empty n list\n";
    return 2;
  }

  std::cout << "N,d,delta,r,elkin_size,behrend_size,behrend_bound,"
               "elkin_bound,elkin_ratio,behrend_ratio\n";
  for (const auto n : ns) {
    const auto params = apfree::derive_params(n, c_delta, trials, seed);
    const auto elkin = apfree::construct(params, threads);
    const auto behrend = apfree::behrend_construct(n);
    const double bb = apfree::behrend_bound(n);
    const double eb = apfree::elkin_bound(n);
    std::cout << n << ',' << params.d << ','
              << apfree::format_double(params.delta) << ','
              << apfree::format_double(params.spec.r) << ',' << elkin.size()
              << ',' << behrend.size() << ',' << apfree::format_double(bb)
              << ',' << apfree::format_double(eb) << ','
              << apfree::format_double(static_cast<double>(elkin.size()) / eb)
              << ','
              << apfree::format_double(static_cast<double>(behrend.size()) /
                                       bb)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"progression-free set construction toolkit"};
  app.require_subcommand(1);

  ConstructOptions copt;
  auto* construct = app.add_subcommand(
      "construct", "build a progression-free subset of {1..n}");
  construct->add_option("--n", copt.n, "interval upper end")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--trials", copt.trials, "independent trials");
  construct->add_option("--seed", copt.seed, "master seed");
  construct->add_option("--c-delta", copt.c_delta, "thickness multiplier");
  construct->add_option("--d-override", copt.d_override,
                        "fix the torus dimension");
  construct->add_option("--threads", copt.threads, "worker threads")
      ->check(CLI::Range(1, 256));
  construct->add_option("--out", copt.out_path, "set file path");
  construct->add_option("--report", copt.report_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string verify_path;
  std::int64_t verify_n = 0;
  auto* verify =
      app.add_subcommand("verify", "certify a set file progression-free");
  verify->add_option("file", verify_path, "set file")->required();
  verify->add_option("--n", verify_n, "interval upper end");

  std::int64_t oracle_n = 0;
  std::uint64_t oracle_budget = 100'000'000;
  auto* oracle =
      app.add_subcommand("oracle", "exact maximum by branch and bound");
  oracle->add_option("--n", oracle_n, "interval upper end")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{62}));
  oracle->add_option("--budget", oracle_budget, "node budget");

  std::int64_t cmp_n = 0, cmp_trials = 64;
  std::uint64_t cmp_seed = 1;
  double cmp_c_delta = 1.0;
  int cmp_threads = 1;
  auto* compare = app.add_subcommand(
      "compare", "torus construction vs digit spheres vs bounds");
  compare->add_option("--n", cmp_n, "interval upper end")->required();
  compare->add_option("--trials", cmp_trials, "independent trials");
  compare->add_option("--seed", cmp_seed, "master seed");
  compare->add_option("--c-delta", cmp_c_delta, "thickness multiplier");
  compare->add_option("--threads", cmp_threads, "worker threads")
      ->check(CLI::Range(1, 256));

  std::string sweep_list;
  std::int64_t sweep_trials = 64;
  std::uint64_t sweep_seed = 1;
  double sweep_c_delta = 1.0;
  int sweep_threads = 1;
  auto* sweep =
      app.add_subcommand("sweep", "CSV of sizes and bounds over several n");
  sweep->add_option("--n-list", sweep_list, "comma-separated n values")
      ->required();
  sweep->add_option("--trials", sweep_trials, "independent trials");
  sweep->add_option("--seed", sweep_seed, "master seed");
  sweep->add_option("--c-delta", sweep_c_delta, "thickness multiplier");
  sweep->add_option("--threads", sweep_threads, "worker threads")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return cmd_construct(copt);
    if (*verify)
      return cmd_verify(verify_path,
                        verify->count("--n") ? std::optional(verify_n)
                                             : std::nullopt);
    if (*oracle) return cmd_oracle(oracle_n, oracle_budget);
    if (*compare)
      return cmd_compare(cmp_n, cmp_trials, cmp_seed, cmp_c_delta,
                         cmp_threads);
    if (*sweep)
      return cmd_sweep(sweep_list, sweep_trials, sweep_seed, sweep_c_delta,
                       sweep_threads);
  } catch (const apfree::SetFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
