#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "apfree/rng.hpp"

namespace apfree {

// Fractional part mapped into [0,1). Rounding can make x - floor(x) hit
// exactly 1.0 for tiny negative x; that case wraps to 0 so the half-open
// interval invariant holds for every double input.
inline double wrap_unit(double v) {
  const double f = v - std::floor(v);
  return f < 1.0 ? f : 0.0;
}

template <typename Derived>
auto wrap_unit(const Eigen::ArrayBase<Derived>& v) {
  return v.derived().unaryExpr([](double x) { return wrap_unit(x); });
}

// Point of the d-dimensional torus, coordinates in [0,1)^d.
class TorusPoint {
 public:
  TorusPoint() = default;

  explicit TorusPoint(Eigen::ArrayXd coords) : coords_(std::move(coords)) {
    if (coords_.size() == 0)
      throw std::invalid_argument("TorusPoint: dimension must be at least 1");
    if ((coords_ < 0.0).any() || (coords_ >= 1.0).any())
      throw std::invalid_argument("TorusPoint: coordinates must lie in [0,1)");
  }

  // Reduce arbitrary real coordinates mod 1.
  static TorusPoint wrap(const Eigen::ArrayXd& v) {
    TorusPoint p;
    p.coords_ = wrap_unit(v);
    return p;
  }

  static TorusPoint zero(Eigen::Index dim) {
    TorusPoint p;
    p.coords_ = Eigen::ArrayXd::Zero(dim);
    return p;
  }

  static TorusPoint constant(Eigen::Index dim, double value) {
    return TorusPoint(Eigen::ArrayXd::Constant(dim, value));
  }

  // Coordinates drawn in index order, one uniform each.
  static TorusPoint random(Eigen::Index dim, Xoshiro256ss& rng) {
    TorusPoint p;
    p.coords_.resize(dim);
    for (Eigen::Index i = 0; i < dim; ++i) p.coords_[i] = rng.uniform01();
    return p;
  }

  const Eigen::ArrayXd& coords() const { return coords_; }
  Eigen::Index dim() const { return coords_.size(); }

 private:
  Eigen::ArrayXd coords_;
};

// psi(n) = frac(theta * n + alpha), written into a caller-owned buffer so a
// scan over n = 1..N does not allocate per step. psi_map and the scan in
// run_trial share this exact expression; keep them identical, membership
// decisions must not depend on which entry point computed the point.
inline void psi_into(Eigen::ArrayXd& out, const Eigen::ArrayXd& theta,
                     const Eigen::ArrayXd& alpha, std::int64_t n) {
  out = theta * static_cast<double>(n) + alpha;
  out -= out.floor();
  out = (out < 1.0).select(out, 0.0);
}

inline TorusPoint psi_map(std::int64_t n, const TorusPoint& theta,
                          const TorusPoint& alpha) {
  if (theta.dim() != alpha.dim())
    throw std::invalid_argument("psi_map: theta and alpha dimensions differ");
  if (n < 1) throw std::invalid_argument("psi_map: n must be at least 1");
  Eigen::ArrayXd out;
  psi_into(out, theta.coords(), alpha.coords(), n);
  return TorusPoint::wrap(out);
}

inline TorusPoint torus_add(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("torus_add: dimensions differ");
  return TorusPoint::wrap(a.coords() + b.coords());
}

// Largest per-coordinate circle distance; handy for closeness assertions.
inline double torus_max_distance(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("torus_max_distance: dimensions differ");
  const Eigen::ArrayXd diff = (a.coords() - b.coords()).abs();
  return diff.min(1.0 - diff).maxCoeff();
}

}  // namespace apfree
