#include "apfree/behrend.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace apfree {

namespace {

// (2m)^k >= bound, computed without overflow.
bool pow_at_least(std::int64_t base, int k, std::int64_t bound) {
  std::int64_t acc = 1;
  for (int i = 0; i < k; ++i) {
    if (acc >= (bound + base - 1) / base) return true;
    acc *= base;
  }
  return acc >= bound;
}

// Smallest m with (2m)^k >= n, i.e. ceil(n^(1/k) / 2). The float estimate is
// corrected by integer checks so boundary cases land exactly.
std::int64_t alphabet_size(std::int64_t n, int k) {
  double est = std::ceil(std::pow(static_cast<double>(n), 1.0 / k) / 2.0);
  auto m = static_cast<std::int64_t>(est);
  m = std::max<std::int64_t>(m, 1);
  while (m > 1 && pow_at_least(2 * (m - 1), k, n)) --m;
  while (!pow_at_least(2 * m, k, n)) ++m;
  return m;
}

struct ShellScan {
  std::int64_t shell = 0;
  std::int64_t count = 0;
};

// Histogram of digit-square-sums over valid n, then the fullest shell
// (ties: smaller shell). Returns count 0 when no n in range is valid.
ShellScan best_shell(std::int64_t n, std::int64_t q, int k, std::int64_t m) {
  const auto top = static_cast<std::size_t>(k) *
                   static_cast<std::size_t>((m - 1) * (m - 1));
  std::vector<std::int64_t> histogram(top + 1, 0);
  for (std::int64_t v = 1; v <= n; ++v) {
    std::int64_t rem = v;
    std::int64_t shell = 0;
    bool valid = true;
    for (int i = 0; i < k; ++i) {
      const std::int64_t digit = rem % q;
      if (digit >= m) {
        valid = false;
        break;
      }
      shell += digit * digit;
      rem /= q;
    }
    if (!valid || rem != 0) continue;
    ++histogram[static_cast<std::size_t>(shell)];
  }
  ShellScan out;
  for (std::size_t s = 1; s < histogram.size(); ++s)
    if (histogram[s] > out.count) {
      out.count = histogram[s];
      out.shell = static_cast<std::int64_t>(s);
    }
  return out;
}

std::vector<std::int64_t> collect_shell(std::int64_t n, std::int64_t q, int k,
                                        std::int64_t m, std::int64_t shell) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 1; v <= n; ++v) {
    std::int64_t rem = v;
    std::int64_t sum = 0;
    bool valid = true;
    for (int i = 0; i < k; ++i) {
      const std::int64_t digit = rem % q;
      if (digit >= m) {
        valid = false;
        break;
      }
      sum += digit * digit;
      rem /= q;
    }
    if (valid && rem == 0 && sum == shell) out.push_back(v);
  }
  return out;
}

}  // namespace

BehrendResult behrend_construct_detailed(std::int64_t n) {
  if (n < 4)
    throw std::invalid_argument("behrend_construct: n must be at least 4");

  const auto center =
      static_cast<int>(std::lround(std::sqrt(std::log2(static_cast<double>(n)))));

  BehrendParams chosen;
  std::int64_t chosen_count = -1;
  // Candidate order fixes the tie-break: the center k and the even base are
  // preferred when sizes match.
  for (const int k : {center, center - 1, center + 1}) {
    if (k < 1) continue;
    const std::int64_t m = alphabet_size(n, k);
    if (m < 2) continue;  // alphabet {0} yields nothing
    for (const std::int64_t q : {2 * m, 2 * m - 1}) {
      const ShellScan scan = best_shell(n, q, k, m);
      if (scan.count > chosen_count) {
        chosen_count = scan.count;
        chosen = {n, q, k, m, scan.shell};
      }
    }
  }
  if (chosen_count < 1)
    throw std::logic_error("behrend_construct: no nonempty shell found");

  BehrendResult out;
  out.params = chosen;
  out.set = CandidateSet::from_elements(
      n, collect_shell(n, chosen.base, chosen.digits, chosen.alphabet,
                       chosen.shell));
  if (out.set.size() != chosen_count)
    throw std::logic_error("behrend_construct: shell collection mismatch");
  if (!verify_ap_free(out.set))
    throw std::logic_error("behrend_construct: result failed certification");
  return out;
}

CandidateSet behrend_construct(std::int64_t n) {
  return behrend_construct_detailed(n).set;
}

}  // namespace apfree
