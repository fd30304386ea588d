#pragma once

#include <cstdint>
#include <optional>

#include "apfree/annulus.hpp"
#include "apfree/apcore.hpp"
#include "apfree/torus.hpp"

namespace apfree {

// Everything a construction run needs; fully determined by (n, c_delta,
// trials, seed) plus an optional dimension override, so runs are replayable.
struct ConstructionParams {
  std::int64_t n_limit = 0;
  int d = 0;
  double delta = 0.0;
  AnnulusSpec spec;
  std::int64_t trials = 0;
  std::uint64_t master_seed = 0;
  double c_delta = 1.0;

  ConstructionParams(std::int64_t n, AnnulusSpec s, std::int64_t t,
                     std::uint64_t seed, double c)
      : n_limit(n), d(s.d), delta(s.delta), spec(s), trials(t),
        master_seed(seed), c_delta(c) {}
};

// Dimension d = ceil(sqrt(2 log2 n)), thickness
// delta = min(c_delta * sqrt(d) * n^(-2/d), 1/10 - 1e-4), radius from
// select_radius. The cap keeps the thickness inside the regime where the
// no-wraparound argument holds regardless of c_delta.
ConstructionParams derive_params(std::int64_t n, double c_delta,
                                 std::int64_t trials, std::uint64_t seed);

// Same derivation with d fixed by the caller.
ConstructionParams derive_params_with_d(std::int64_t n, int d, double c_delta,
                                        std::int64_t trials,
                                        std::uint64_t seed);

// Bypass radius selection entirely; for tests and audits with a hand-picked
// shell.
ConstructionParams params_with_spec(std::int64_t n, const AnnulusSpec& spec,
                                    std::int64_t trials, std::uint64_t seed,
                                    double c_delta = 1.0);

// Number of Monte Carlo points the radius histogram (and the reported volume
// estimate) uses: enough for ~100 expected hits per delta-sized cell, capped.
std::int64_t radius_sample_rule(int d, double delta);
bool radius_samples_capped(int d, double delta);

struct TrialOutcome {
  std::int64_t trial_index = 0;
  TorusPoint theta;
  TorusPoint alpha;
  std::int64_t raw_size = 0;    // |A| before deletion
  std::uint64_t ap_count = 0;   // T(A)
  std::int64_t final_size = 0;  // after greedy deletion
  std::int64_t score = 0;       // raw_size - ap_count, logged not selected on
};

// One independent (theta, alpha) draw: collect the preimage of the annulus
// under n -> frac(theta n + alpha), count its progressions, greedily delete.
// Stream `trial_index` of the master seed; theta before alpha.
TrialOutcome run_trial(const ConstructionParams& p, std::int64_t trial_index);

struct ConstructionResult {
  CandidateSet set;
  TrialOutcome best;
};

// Best of p.trials independent trials (largest final size; ties to the
// smallest trial index). The returned set is re-certified progression-free.
// The outcome is identical for every thread count.
ConstructionResult construct_detailed(const ConstructionParams& p,
                                      int threads = 1);
CandidateSet construct(const ConstructionParams& p, int threads = 1);

struct ExpectationAudit {
  std::int64_t trials = 0;
  double mean_raw_size = 0.0;
  double se_raw_size = 0.0;
  double mean_ap_count = 0.0;
  double se_ap_count = 0.0;
  VolumeEstimate volume;          // Monte Carlo vol(S)
  double expected_raw_size = 0.0; // n * vol(S)
  // Deletion inequality E(2/3 |A| - T) >= (1/3) n vol(S), reported as
  // lhs / rhs with standard errors propagated from both sides.
  double lhs_mean = 0.0;
  double lhs_se = 0.0;
  double rhs_mean = 0.0;
  double rhs_se = 0.0;
};

// Empirical check that trial statistics match their first moments.
// trials >= 100.
ExpectationAudit expectation_audit(const ConstructionParams& p,
                                   std::int64_t trials,
                                   std::int64_t vol_samples,
                                   int threads = 1);

struct SizeFloor {
  double floor = 0.0;       // n * vol(S) / 6
  double shape_term = 0.0;  // sqrt(d) * 2^(-d) * n^(1 - 2/d)
};

// What the expectation argument guarantees after deletion, plus the
// closed-form shape of that guarantee for the derived delta.
SizeFloor size_floor(std::int64_t n, int d, double vol_s);

}  // namespace apfree
