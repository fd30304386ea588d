#pragma once

#include <cstdint>

#include "apfree/apcore.hpp"

namespace apfree {

struct BehrendParams {
  std::int64_t n_limit = 0;
  std::int64_t base = 0;      // q, digit base
  int digits = 0;             // k
  std::int64_t alphabet = 0;  // m, digits drawn from {0..m-1}
  std::int64_t shell = 0;     // squared radius of the chosen digit sphere
};

struct BehrendResult {
  CandidateSet set;
  BehrendParams params;
};

// Digit-sphere construction: numbers whose base-q digits lie in {0..m-1} and
// have a fixed sum of squares. Digit sums stay below q, so addition of two
// such numbers never carries and a progression in the integers would force a
// progression of digit vectors on a sphere, which convexity rules out.
//
// k is searched near round(sqrt(log2 n)) and the base over q in
// {2m-1, 2m}; the largest shell wins. The result is certified before return.
BehrendResult behrend_construct_detailed(std::int64_t n);

CandidateSet behrend_construct(std::int64_t n);

}  // namespace apfree
