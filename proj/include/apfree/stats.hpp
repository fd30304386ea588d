#pragma once

#include <cstdint>
#include <vector>

namespace apfree {

// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
// Series expansion for x < a + 1, Lentz continued fraction otherwise.
double regularized_gamma_q(double a, double x);

// Survival function of the chi-square distribution.
double chi_square_pvalue(double statistic, int dof);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Goodness of fit of observed cell counts against the uniform distribution
// over the cells.
ChiSquareResult chi_square_uniform(const std::vector<std::int64_t>& counts);

struct RunningMean {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d1 = x - mean;
    mean += d1 / static_cast<double>(n);
    m2 += d1 * (x - mean);
  }

  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double std_error() const;
};

}  // namespace apfree
