#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "apfree/annulus.hpp"

namespace apfree {

// Thrown when a caller violates a documented precondition that is checked at
// runtime (as opposed to plain argument validation).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A subset of {1..n_limit}, elements strictly increasing. certified_ap_free
// is a cache maintained by verify_ap_free; it never substitutes for a check.
struct CandidateSet {
  std::int64_t n_limit = 0;
  std::vector<std::int64_t> elements;
  bool certified_ap_free = false;

  static CandidateSet from_elements(std::int64_t n_limit,
                                    std::vector<std::int64_t> elems);

  std::int64_t size() const {
    return static_cast<std::int64_t>(elements.size());
  }
};

// Nontrivial arithmetic progression a < b < c with a + c = 2b.
struct ApTriple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  bool operator==(const ApTriple&) const = default;
};

// Number of nontrivial 3-term progressions in s. Bit-parallel: for each gap
// g, AND the characteristic vector with itself shifted by +g and -g and
// popcount the middles. Exact integer arithmetic throughout.
std::uint64_t count_3aps(const CandidateSet& s);

// Reference implementation: enumerate pairs (a, c) of equal parity and test
// the midpoint by binary search. Independent of the bit-parallel path.
std::uint64_t count_3aps_naive(const CandidateSet& s);

// Progression count of the full interval {1..n} in closed form.
std::uint64_t full_interval_3ap_count(std::int64_t n);

// Progressions of s in lexicographic order, at most cap of them.
std::vector<ApTriple> enumerate_3aps(const CandidateSet& s, std::int64_t cap);

// True iff s has no nontrivial 3-term progression. Updates the cache flag.
bool verify_ap_free(CandidateSet& s);

// Repeatedly delete the element participating in the most progressions
// (ties: the smallest element) until none remain. Removes at most one
// element per progression, so |result| >= |s| - count_3aps(s).
CandidateSet greedy_delete_to_ap_free(const CandidateSet& s);

// Given x with x - y, x, x + y all inside the annulus, the parallelogram law
// pins the offset: |y|_2 <= sqrt(2 * delta * r). Returns whether y satisfies
// that bound; throws precondition_error when the three-point premise fails.
bool check_difference_norm_bound(const Eigen::ArrayXd& x,
                                 const Eigen::ArrayXd& y,
                                 const AnnulusSpec& spec);

}  // namespace apfree
