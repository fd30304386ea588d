#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "apfree/torus.hpp"

namespace apfree {

// Annulus S(r) = { x in [0,1/2]^d : r - delta <= |x|_2 <= r }, the spherical
// shell intersected with the box that identifies torus points with genuine
// Euclidean vectors. Only geometric coherence is enforced here; the stricter
// thickness requirement of the construction pipeline (delta < 1/10) is checked
// where construction parameters are derived.
struct AnnulusSpec {
  int d;
  double r;
  double delta;

  AnnulusSpec(int d_, double r_, double delta_) : d(d_), r(r_), delta(delta_) {
    if (d < 1) throw std::invalid_argument("AnnulusSpec: d must be at least 1");
    if (!(delta > 0.0) || !(r >= delta))
      throw std::invalid_argument("AnnulusSpec: need 0 < delta <= r");
    if (!(r <= std::sqrt(static_cast<double>(d)) / 2.0 + 1e-12))
      throw std::invalid_argument("AnnulusSpec: r exceeds the box diagonal");
  }

  double inner() const { return r - delta; }
};

// Membership test on raw coordinates. Works on any real vector, not only
// torus points: the construction also probes x - y and x + y where y can
// have negative coordinates, and those probes must use the same comparison.
// Norms are compared squared; r*r is exact enough at the scales involved and
// it keeps the hot loop free of sqrt.
inline bool annulus_contains(const Eigen::ArrayXd& v, const AnnulusSpec& spec) {
  if (v.size() != spec.d)
    throw std::invalid_argument("annulus_contains: dimension mismatch");
  if ((v < 0.0).any() || (v > 0.5).any()) return false;
  const double nsq = v.matrix().squaredNorm();
  const double in = spec.inner();
  return nsq >= in * in && nsq <= spec.r * spec.r;
}

inline bool annulus_contains(const TorusPoint& p, const AnnulusSpec& spec) {
  return annulus_contains(p.coords(), spec);
}

struct VolumeEstimate {
  double mean = 0.0;       // in [0,1], fraction of the unit torus
  double std_error = 0.0;  // binomial standard error of mean
  std::int64_t samples = 0;
};

// Monte Carlo volume of S(r) as a subset of the unit torus.
VolumeEstimate estimate_annulus_volume(const AnnulusSpec& spec,
                                       std::int64_t samples,
                                       std::uint64_t seed);

// Pigeonhole choice of the shell: histogram |x|_2 over uniform draws from
// [0,1/2]^d in bins of width delta and take the fullest bin (ties break to
// the smaller radius). Returns the annulus at that bin's right edge.
AnnulusSpec select_radius(int d, double delta, std::int64_t samples,
                          std::uint64_t seed);

struct NormConcentration {
  double mean_norm = 0.0;
  double fraction_within = 0.0;  // mass of |x| within 1 of sqrt(d/12)
};

// Diagnostic backing the shell choice: |x|_2 over [0,1/2]^d concentrates
// around sqrt(d/12) with O(1) spread.
NormConcentration norm_concentration_stats(int d, std::int64_t samples,
                                           std::uint64_t seed);

}  // namespace apfree
