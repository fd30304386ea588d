#pragma once

#include <cstdint>

#include "apfree/apcore.hpp"

namespace apfree {

enum class OracleStatus { Exact, BudgetExhausted };

struct OracleResult {
  std::int64_t n_limit = 0;
  std::int64_t r3 = 0;  // exact when status == Exact, otherwise best found
  CandidateSet witness;
  std::uint64_t nodes_explored = 0;
  OracleStatus status = OracleStatus::Exact;
};

// Exact maximum size of a progression-free subset of {1..n}, by
// branch-and-bound over elements in increasing order (include branch first).
// The witness is the lexicographically smallest optimal set. n <= 62.
OracleResult exact_r3(std::int64_t n, std::uint64_t node_budget = 100'000'000);

// Brute force over all 2^n subsets. n <= 24. Exists to check exact_r3, so it
// shares no code with it.
std::int64_t naive_r3(std::int64_t n);

}  // namespace apfree
