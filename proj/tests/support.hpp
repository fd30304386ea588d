#pragma once

// Shared helpers for the test binaries. Oracles used by tests live here or
// in the test files themselves so they stay independent of the library code
// they check.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>

#include "apfree/annulus.hpp"
#include "apfree/rng.hpp"

namespace testsupport {

inline double gaussian(apfree::Xoshiro256ss& rng) {
  // Box-Muller, one value per call; u1 kept away from 0
  const double u1 = 1.0 - rng.uniform01();
  const double u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Uniform point of the closed ball of given radius.
inline Eigen::ArrayXd sample_ball(int d, double radius,
                                  apfree::Xoshiro256ss& rng) {
  Eigen::ArrayXd v(d);
  for (int i = 0; i < d; ++i) v[i] = gaussian(rng);
  const double norm = std::sqrt(v.matrix().squaredNorm());
  const double scale =
      radius * std::pow(rng.uniform01(), 1.0 / d) / (norm > 0 ? norm : 1.0);
  return v * scale;
}

// Uniform point of the annulus, by rejection from the box [0,1/2]^d.
inline Eigen::ArrayXd sample_annulus(const apfree::AnnulusSpec& spec,
                                     apfree::Xoshiro256ss& rng) {
  Eigen::ArrayXd x(spec.d);
  for (;;) {
    for (int i = 0; i < spec.d; ++i) x[i] = 0.5 * rng.uniform01();
    if (apfree::annulus_contains(x, spec)) return x;
  }
}

// Composite Simpson rule on [a, b] with n subintervals (n even).
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace testsupport
