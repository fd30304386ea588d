#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "apfree/rng.hpp"
#include "apfree/stats.hpp"

using namespace apfree;

TEST_CASE("regularized gamma Q against closed forms") {
  // a = 1 (two degrees of freedom): Q(1, x) = exp(-x)
  for (double x : {0.0, 0.1, 0.5, 1.0, 2.5, 7.0, 20.0}) {
    CHECK(regularized_gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  }
  // a = 2 (four degrees of freedom): Q(2, x) = (1 + x) exp(-x)
  for (double x : {0.0, 0.3, 1.0, 4.0, 11.0}) {
    CHECK(regularized_gamma_q(2.0, x) ==
          doctest::Approx((1.0 + x) * std::exp(-x)).epsilon(1e-12));
  }
  // a = 1/2 (one degree of freedom): Q(1/2, x) = erfc(sqrt(x))
  for (double x : {0.01, 0.25, 1.0, 3.0, 9.0}) {
    CHECK(regularized_gamma_q(0.5, x) ==
          doctest::Approx(std::erfc(std::sqrt(x))).epsilon(1e-12));
  }
  // integer a: Q(a, x) = exp(-x) * sum_{k<a} x^k / k!
  for (int a : {3, 5, 8}) {
    for (double x : {0.5, 2.0, 6.0, 15.0}) {
      double term = 1.0, sum = 1.0;
      for (int k = 1; k < a; ++k) {
        term *= x / k;
        sum += term;
      }
      CHECK(regularized_gamma_q(a, x) ==
            doctest::Approx(std::exp(-x) * sum).epsilon(1e-11));
    }
  }
  CHECK(regularized_gamma_q(3.7, 0.0) == 1.0);
  CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regularized_gamma_q(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("chi square p-value") {
  CHECK(chi_square_pvalue(0.0, 5) == doctest::Approx(1.0));
  // dof = 2: p = exp(-stat / 2)
  CHECK(chi_square_pvalue(3.0, 2) == doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
  // dof = 1: p = erfc(sqrt(stat / 2))
  CHECK(chi_square_pvalue(4.0, 1) ==
        doctest::Approx(std::erfc(std::sqrt(2.0))).epsilon(1e-12));
  CHECK(chi_square_pvalue(200.0, 3) < 1e-9);
  CHECK_THROWS_AS(chi_square_pvalue(1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(chi_square_pvalue(-1.0, 2), std::invalid_argument);
}

TEST_CASE("chi square uniform statistic") {
  SUBCASE("perfectly uniform counts give statistic zero") {
    auto r = chi_square_uniform({250, 250, 250, 250});
    CHECK(r.statistic == doctest::Approx(0.0));
    CHECK(r.p_value == doctest::Approx(1.0));
    CHECK(r.dof == 3);
  }
  SUBCASE("hand-computed statistic") {
    // counts {30, 10}, expected 20 each: (100 + 100) / 20 = 10
    auto r = chi_square_uniform({30, 10});
    CHECK(r.statistic == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(r.dof == 1);
    CHECK(r.p_value == doctest::Approx(std::erfc(std::sqrt(5.0))).epsilon(1e-12));
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(chi_square_uniform({}), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_uniform({5}), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_uniform({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_uniform({3, -1}), std::invalid_argument);
  }
}

TEST_CASE("running mean matches two-pass computation") {
  Xoshiro256ss rng(99);
  std::vector<double> xs;
  RunningMean rm;
  for (int i = 0; i < 5000; ++i) {
    double v = rng.uniform01() * 10.0 - 3.0;
    xs.push_back(v);
    rm.add(v);
  }
  double mean = 0.0;
  for (double v : xs) mean += v;
  mean /= xs.size();
  double ss = 0.0;
  for (double v : xs) ss += (v - mean) * (v - mean);
  const double var = ss / (xs.size() - 1);
  CHECK(rm.n == 5000);
  CHECK(rm.mean == doctest::Approx(mean).epsilon(1e-12));
  CHECK(rm.variance() == doctest::Approx(var).epsilon(1e-10));
  CHECK(rm.std_error() ==
        doctest::Approx(std::sqrt(var / xs.size())).epsilon(1e-10));
}

TEST_CASE("running mean of a constant") {
  RunningMean rm;
  for (int i = 0; i < 10; ++i) rm.add(4.25);
  CHECK(rm.mean == doctest::Approx(4.25));
  CHECK(rm.variance() == doctest::Approx(0.0));
}
