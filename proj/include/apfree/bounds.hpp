#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace apfree {

// Classical lower-bound guarantees for the size of the largest
// progression-free subset of {1..n}. Convention: the exponential factor is
// 2^(2*sqrt(2)*sqrt(log2 n)); the polylog factor uses the natural log and
// constant 1. Asymptotic shapes for reporting, not certified set sizes.
inline double bound_shared_denominator(std::int64_t n) {
  const double l2 = std::log2(static_cast<double>(n));
  return std::exp2(2.0 * std::sqrt(2.0) * std::sqrt(l2));
}

inline double behrend_bound(std::int64_t n) {
  if (n < 8) throw std::invalid_argument("behrend_bound: n must be at least 8");
  const double ln = std::log(static_cast<double>(n));
  return static_cast<double>(n) /
         (bound_shared_denominator(n) * std::pow(ln, 0.25));
}

inline double elkin_bound(std::int64_t n) {
  if (n < 8) throw std::invalid_argument("elkin_bound: n must be at least 8");
  const double ln = std::log(static_cast<double>(n));
  return static_cast<double>(n) * std::pow(ln, 0.25) /
         bound_shared_denominator(n);
}

}  // namespace apfree
