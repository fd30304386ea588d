#include "apfree/oracle.hpp"

#include <bit>
#include <vector>

namespace apfree {

namespace {

// Masks use bit e-1 for element e.
std::vector<std::int64_t> mask_to_elements(std::uint64_t mask) {
  std::vector<std::int64_t> out;
  while (mask) {
    const int b = std::countr_zero(mask);
    out.push_back(b + 1);
    mask &= mask - 1;
  }
  return out;
}

struct Search {
  std::int64_t n;
  std::uint64_t all;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int best_size;
  std::uint64_t best_mask = 0;
  bool found = false;

  // Elements considered in increasing order, include branch first, so the
  // first optimum reached is the lexicographically smallest one. forbidden
  // holds elements that would complete a progression with two chosen ones;
  // every progression a < b < c gets caught because c is marked the moment
  // b joins a.
  void dfs(std::int64_t v, std::uint64_t chosen, std::uint64_t forbidden,
           int count) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (v > n) {
      if (count > best_size) {
        best_size = count;
        best_mask = chosen;
        found = true;
      }
      return;
    }
    const std::uint64_t rest = all & (~std::uint64_t{0} << (v - 1));
    const int room = std::popcount(rest & ~forbidden);
    if (count + room <= best_size) return;

    const std::uint64_t vbit = std::uint64_t{1} << (v - 1);
    if (!(forbidden & vbit)) {
      std::uint64_t next_forbidden = forbidden;
      for (std::uint64_t m = chosen; m;) {
        const int a = std::countr_zero(m) + 1;
        m &= m - 1;
        const std::int64_t c = 2 * v - a;
        if (c <= n) next_forbidden |= std::uint64_t{1} << (c - 1);
      }
      dfs(v + 1, chosen | vbit, next_forbidden, count + 1);
    }
    dfs(v + 1, chosen, forbidden, count);
  }
};

// Initial incumbent: greedy deletion applied to the whole interval. Its
// output is progression-free, so its size is a valid lower bound.
std::uint64_t greedy_seed(std::int64_t n) {
  std::vector<std::int64_t> all(static_cast<std::size_t>(n));
  for (std::int64_t v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
  const CandidateSet cleaned =
      greedy_delete_to_ap_free(CandidateSet::from_elements(n, std::move(all)));
  std::uint64_t mask = 0;
  for (const auto e : cleaned.elements) mask |= std::uint64_t{1} << (e - 1);
  return mask;
}

}  // namespace

OracleResult exact_r3(std::int64_t n, std::uint64_t node_budget) {
  if (n < 1) throw std::invalid_argument("exact_r3: n must be at least 1");
  if (n > 62) throw std::invalid_argument("exact_r3: n must be at most 62");

  const std::uint64_t seed_mask = greedy_seed(n);
  const int seed_size = std::popcount(seed_mask);

  Search search;
  search.n = n;
  search.all = (std::uint64_t{1} << n) - 1;
  search.budget = node_budget;
  // One below the incumbent: forces the search to rediscover the optimum
  // itself, which is what makes the returned witness the lex-smallest one.
  search.best_size = seed_size - 1;
  search.dfs(1, 0, 0, 0);

  OracleResult out;
  out.n_limit = n;
  out.nodes_explored = search.nodes;
  if (search.exhausted) {
    out.status = OracleStatus::BudgetExhausted;
    const std::uint64_t mask = search.found ? search.best_mask : seed_mask;
    out.r3 = std::popcount(mask);
    out.witness = CandidateSet::from_elements(n, mask_to_elements(mask));
  } else {
    out.status = OracleStatus::Exact;
    out.r3 = search.best_size;
    out.witness =
        CandidateSet::from_elements(n, mask_to_elements(search.best_mask));
  }
  if (!verify_ap_free(out.witness))
    throw std::logic_error("exact_r3: witness failed certification");
  return out;
}

std::int64_t naive_r3(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("naive_r3: n must be at least 1");
  if (n > 24) throw std::invalid_argument("naive_r3: n must be at most 24");

  // All progression masks; small gaps first since they reject most subsets.
  std::vector<std::uint32_t> traps;
  for (std::int64_t g = 1; 2 * g <= n - 1; ++g)
    for (std::int64_t a = 1; a + 2 * g <= n; ++a)
      traps.push_back((1u << (a - 1)) | (1u << (a + g - 1)) |
                      (1u << (a + 2 * g - 1)));

  std::int64_t best = 0;
  const std::uint32_t limit = static_cast<std::uint32_t>((1u << n) - 1);
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    if (std::popcount(mask) <= best) continue;
    bool ok = true;
    for (const std::uint32_t t : traps)
      if ((mask & t) == t) {
        ok = false;
        break;
      }
    if (ok) best = std::popcount(mask);
  }
  return best;
}

}  // namespace apfree
