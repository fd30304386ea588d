#include "apfree/annulus.hpp"

#include <algorithm>
#include <vector>

#include "apfree/rng.hpp"

namespace apfree {

namespace {

constexpr std::uint64_t kVolumeStream = 0x766f6c;     // distinct substreams
constexpr std::uint64_t kRadiusStream = 0x726164;     // per sampling purpose
constexpr std::uint64_t kConcentrationStream = 0x636f6e;

}  // namespace

VolumeEstimate estimate_annulus_volume(const AnnulusSpec& spec,
                                       std::int64_t samples,
                                       std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("estimate_annulus_volume: samples must be positive");
  Xoshiro256ss rng(seed, kVolumeStream);
  Eigen::ArrayXd x(spec.d);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    for (int j = 0; j < spec.d; ++j) x[j] = rng.uniform01();
    if (annulus_contains(x, spec)) ++hits;
  }
  VolumeEstimate est;
  est.samples = samples;
  est.mean = static_cast<double>(hits) / static_cast<double>(samples);
  est.std_error = std::sqrt(est.mean * (1.0 - est.mean) /
                            static_cast<double>(samples));
  return est;
}

AnnulusSpec select_radius(int d, double delta, std::int64_t samples,
                          std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("select_radius: d must be at least 1");
  if (!(delta > 0.0) || !(delta < 0.1))
    throw std::invalid_argument("select_radius: delta must lie in (0, 1/10)");
  if (samples < 1)
    throw std::invalid_argument("select_radius: samples must be positive");

  const double max_norm = std::sqrt(static_cast<double>(d)) / 2.0;
  const auto bins = static_cast<std::int64_t>(std::ceil(max_norm / delta));
  std::vector<std::int64_t> histogram(static_cast<std::size_t>(bins), 0);

  Xoshiro256ss rng(seed, kRadiusStream);
  Eigen::ArrayXd x(d);
  for (std::int64_t i = 0; i < samples; ++i) {
    for (int j = 0; j < d; ++j) x[j] = 0.5 * rng.uniform01();
    const double norm = std::sqrt(x.matrix().squaredNorm());
    auto idx = static_cast<std::int64_t>(norm / delta);
    idx = std::min(idx, bins - 1);
    ++histogram[static_cast<std::size_t>(idx)];
  }

  // Fullest bin; ties break toward the smaller radius.
  std::size_t best = 0;
  for (std::size_t i = 1; i < histogram.size(); ++i)
    if (histogram[i] > histogram[best]) best = i;

  const double r =
      std::min(delta * static_cast<double>(best + 1), max_norm);
  return AnnulusSpec(d, r, delta);
}

NormConcentration norm_concentration_stats(int d, std::int64_t samples,
                                           std::uint64_t seed) {
  if (d < 1)
    throw std::invalid_argument("norm_concentration_stats: d must be at least 1");
  if (samples < 10'000)
    throw std::invalid_argument(
        "norm_concentration_stats: need at least 10^4 samples");

  const double center = std::sqrt(static_cast<double>(d) / 12.0);
  Xoshiro256ss rng(seed, kConcentrationStream);
  Eigen::ArrayXd x(d);
  double sum = 0.0;
  std::int64_t within = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    for (int j = 0; j < d; ++j) x[j] = 0.5 * rng.uniform01();
    const double norm = std::sqrt(x.matrix().squaredNorm());
    sum += norm;
    if (std::abs(norm - center) <= 1.0) ++within;
  }
  NormConcentration out;
  out.mean_norm = sum / static_cast<double>(samples);
  out.fraction_within =
      static_cast<double>(within) / static_cast<double>(samples);
  return out;
}

}  // namespace apfree
