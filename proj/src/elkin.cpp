#include "apfree/elkin.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "apfree/rng.hpp"
#include "apfree/stats.hpp"

namespace apfree {

namespace {

constexpr double kDeltaCap = 0.1 - 1e-4;

// Trials draw from a reseeded master so their stream indices can never
// collide with the tagged streams used for volume and radius sampling.
std::uint64_t trial_master(std::uint64_t master_seed) {
  return mix64(master_seed ^ 0x747269616cull);
}

double derived_delta(std::int64_t n, int d, double c_delta) {
  const double raw = c_delta * std::sqrt(static_cast<double>(d)) *
                     std::pow(static_cast<double>(n), -2.0 / d);
  return std::min(raw, kDeltaCap);
}

void validate_common(std::int64_t n, double c_delta, std::int64_t trials) {
  if (n < 8)
    throw std::invalid_argument("derive_params: n must be at least 8");
  if (!(c_delta > 0.0) || !std::isfinite(c_delta))
    throw std::invalid_argument("derive_params: c_delta must be positive");
  if (trials < 1)
    throw std::invalid_argument("derive_params: trials must be at least 1");
}

TrialOutcome run_trial_impl(const ConstructionParams& p,
                            std::int64_t trial_index,
                            CandidateSet* cleaned_out) {
  Xoshiro256ss rng(trial_master(p.master_seed),
                   static_cast<std::uint64_t>(trial_index));
  const TorusPoint theta = TorusPoint::random(p.d, rng);
  const TorusPoint alpha = TorusPoint::random(p.d, rng);

  std::vector<std::int64_t> elems;
  Eigen::ArrayXd x(p.d);
  for (std::int64_t n = 1; n <= p.n_limit; ++n) {
    psi_into(x, theta.coords(), alpha.coords(), n);
    if (annulus_contains(x, p.spec)) elems.push_back(n);
  }

  CandidateSet raw = CandidateSet::from_elements(p.n_limit, std::move(elems));
  TrialOutcome out;
  out.trial_index = trial_index;
  out.theta = theta;
  out.alpha = alpha;
  out.raw_size = raw.size();
  out.ap_count = count_3aps(raw);

  out.score = out.raw_size - static_cast<std::int64_t>(out.ap_count);

  CandidateSet cleaned = greedy_delete_to_ap_free(raw);
  out.final_size = cleaned.size();
  if (cleaned_out) *cleaned_out = std::move(cleaned);
  return out;
}

// Trials are preassigned by index, so the outcome vector is identical no
// matter how many workers run or how they interleave.
std::vector<TrialOutcome> run_all_trials(const ConstructionParams& p,
                                         std::int64_t trials, int threads) {
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  const auto worker = [&](int w) {
    for (std::int64_t i = w; i < trials; i += threads)
      outcomes[static_cast<std::size_t>(i)] = run_trial_impl(p, i, nullptr);
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  return outcomes;
}

}  // namespace

std::int64_t radius_sample_rule(int d, double delta) {
  const double need = 100.0 * std::exp2(static_cast<double>(d)) / delta;
  const double clamped = std::clamp(need, 1e5, 8e6);
  return static_cast<std::int64_t>(std::ceil(clamped));
}

bool radius_samples_capped(int d, double delta) {
  return 100.0 * std::exp2(static_cast<double>(d)) / delta > 8e6;
}

ConstructionParams derive_params(std::int64_t n, double c_delta,
                                 std::int64_t trials, std::uint64_t seed) {
  validate_common(n, c_delta, trials);
  const int d = static_cast<int>(
      std::ceil(std::sqrt(2.0 * std::log2(static_cast<double>(n)))));
  return derive_params_with_d(n, d, c_delta, trials, seed);
}

ConstructionParams derive_params_with_d(std::int64_t n, int d, double c_delta,
                                        std::int64_t trials,
                                        std::uint64_t seed) {
  validate_common(n, c_delta, trials);
  if (d < 1)
    throw std::invalid_argument("derive_params: d must be at least 1");
  const double delta = derived_delta(n, d, c_delta);
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("derive_params: n too small for a positive thickness");
  const AnnulusSpec spec =
      select_radius(d, delta, radius_sample_rule(d, delta), seed);
  return ConstructionParams(n, spec, trials, seed, c_delta);
}

ConstructionParams params_with_spec(std::int64_t n, const AnnulusSpec& spec,
                                    std::int64_t trials, std::uint64_t seed,
                                    double c_delta) {
  if (n < 1)
    throw std::invalid_argument("params_with_spec: n must be at least 1");
  if (trials < 1)
    throw std::invalid_argument("params_with_spec: trials must be at least 1");
  if (!(spec.delta < 0.1))
    throw std::invalid_argument(
        "params_with_spec: construction runs need delta < 1/10");
  return ConstructionParams(n, spec, trials, seed, c_delta);
}

TrialOutcome run_trial(const ConstructionParams& p, std::int64_t trial_index) {
  if (trial_index < 0 || trial_index >= p.trials)
    throw std::invalid_argument("run_trial: trial_index out of range");
  return run_trial_impl(p, trial_index, nullptr);
}

ConstructionResult construct_detailed(const ConstructionParams& p,
                                      int threads) {
  if (threads < 1)
    throw std::invalid_argument("construct: threads must be at least 1");
  const std::vector<TrialOutcome> outcomes =
      run_all_trials(p, p.trials, threads);

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i)
    if (outcomes[i].final_size > outcomes[best].final_size) best = i;

  ConstructionResult out;
  CandidateSet winner;
  out.best = run_trial_impl(p, static_cast<std::int64_t>(best), &winner);
  out.set = std::move(winner);
  if (!verify_ap_free(out.set))
    throw std::logic_error("construct: final set failed certification");
  return out;
}

CandidateSet construct(const ConstructionParams& p, int threads) {
  return construct_detailed(p, threads).set;
}

ExpectationAudit expectation_audit(const ConstructionParams& p,
                                   std::int64_t trials,
                                   std::int64_t vol_samples, int threads) {
  if (trials < 100)
    throw std::invalid_argument("expectation_audit: need at least 100 trials");
  if (vol_samples < 1)
    throw std::invalid_argument("expectation_audit: vol_samples must be positive");

  const std::vector<TrialOutcome> outcomes =
      run_all_trials(p, trials, threads);

  RunningMean raw, ap, lhs;
  for (const auto& t : outcomes) {
    const auto raw_size = static_cast<double>(t.raw_size);
    const auto ap_count = static_cast<double>(t.ap_count);
    raw.add(raw_size);
    ap.add(ap_count);
    lhs.add((2.0 / 3.0) * raw_size - ap_count);
  }

  ExpectationAudit out;
  out.trials = trials;
  out.mean_raw_size = raw.mean;
  out.se_raw_size = raw.std_error();
  out.mean_ap_count = ap.mean;
  out.se_ap_count = ap.std_error();
  out.volume = estimate_annulus_volume(p.spec, vol_samples, p.master_seed);
  out.expected_raw_size = static_cast<double>(p.n_limit) * out.volume.mean;
  out.lhs_mean = lhs.mean;
  out.lhs_se = lhs.std_error();
  out.rhs_mean = static_cast<double>(p.n_limit) * out.volume.mean / 3.0;
  out.rhs_se = static_cast<double>(p.n_limit) * out.volume.std_error / 3.0;
  return out;
}

SizeFloor size_floor(std::int64_t n, int d, double vol_s) {
  if (n < 1) throw std::invalid_argument("size_floor: n must be at least 1");
  if (d < 1) throw std::invalid_argument("size_floor: d must be at least 1");
  if (vol_s < 0.0 || vol_s > 1.0)
    throw std::invalid_argument("size_floor: vol_s must lie in [0,1]");
  SizeFloor out;
  out.floor = static_cast<double>(n) * vol_s / 6.0;
  out.shape_term = std::sqrt(static_cast<double>(d)) *
                   std::exp2(-static_cast<double>(d)) *
                   std::pow(static_cast<double>(n), 1.0 - 2.0 / d);
  return out;
}

}  // namespace apfree
