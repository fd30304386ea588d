#include "apfree/apcore.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace apfree {

CandidateSet CandidateSet::from_elements(std::int64_t n_limit,
                                         std::vector<std::int64_t> elems) {
  if (n_limit < 1)
    throw std::invalid_argument("CandidateSet: n_limit must be at least 1");
  std::int64_t prev = 0;
  for (auto e : elems) {
    if (e <= prev)
      throw std::invalid_argument(
          "CandidateSet: elements must be strictly increasing and >= 1");
    if (e > n_limit)
      throw std::invalid_argument("CandidateSet: element exceeds n_limit");
    prev = e;
  }
  CandidateSet s;
  s.n_limit = n_limit;
  s.elements = std::move(elems);
  return s;
}

namespace {

// Characteristic bits of the set, rebased so bit 0 is the smallest element.
struct CharBits {
  std::vector<std::uint64_t> words;
  std::vector<std::int32_t> occupied;  // indices of nonzero words
  std::int64_t span = 0;               // bits in use

  explicit CharBits(const CandidateSet& s) {
    if (s.elements.empty()) return;
    const std::int64_t lo = s.elements.front();
    span = s.elements.back() - lo + 1;
    words.assign(static_cast<std::size_t>((span + 63) / 64), 0);
    for (auto e : s.elements) {
      const std::int64_t bit = e - lo;
      words[static_cast<std::size_t>(bit >> 6)] |= std::uint64_t{1}
                                                   << (bit & 63);
    }
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(words.size()); ++i)
      if (words[static_cast<std::size_t>(i)] != 0) occupied.push_back(i);
  }

  std::uint64_t word_at(std::int64_t i) const {
    return (i >= 0 && i < static_cast<std::int64_t>(words.size()))
               ? words[static_cast<std::size_t>(i)]
               : 0;
  }

  // 64 bits of the stream starting at bit position pos; pos may be negative
  // or run past the end, missing bits read as zero.
  std::uint64_t window(std::int64_t pos) const {
    const std::int64_t q = pos >> 6;  // floor division
    const int s = static_cast<int>(pos & 63);
    const std::uint64_t lo = word_at(q);
    if (s == 0) return lo;
    return (lo >> s) | (word_at(q + 1) << (64 - s));
  }
};

}  // namespace

std::uint64_t count_3aps(const CandidateSet& s) {
  const CharBits bits(s);
  if (bits.span < 3) return 0;
  const std::int64_t gmax = (bits.span - 1) / 2;
  const auto nwords = static_cast<std::int64_t>(bits.words.size());
  const auto occ = [&](std::int64_t w) {
    return w >= 0 && w < nwords && bits.words[static_cast<std::size_t>(w)] != 0;
  };

  // b is a middle element iff bits b-g and b+g are both set. Gaps are walked
  // in blocks of 64 sharing the word that holds the start of the lower
  // window; a block runs only when both shifted windows can be nonzero,
  // which keeps sparse sets spread over a wide interval cheap.
  std::uint64_t count = 0;
  const auto& occupied = bits.occupied;
  for (std::size_t mi = 0; mi < occupied.size(); ++mi) {
    const auto wm = static_cast<std::int64_t>(occupied[mi]);
    const std::int64_t base = wm << 6;
    const std::uint64_t mid = bits.words[static_cast<std::size_t>(wm)];
    std::int64_t last_owner = std::numeric_limits<std::int64_t>::min();
    for (std::size_t li = 0; li <= mi; ++li) {
      const auto o = static_cast<std::int64_t>(occupied[li]);
      for (const std::int64_t wl : {o - 1, o}) {
        // owners arrive nondecreasing; equal neighbors collapse
        if (wl == last_owner) continue;
        last_owner = wl;
        // gaps whose lower window starts inside word wl
        const std::int64_t ghi = std::min(gmax, base - (wl << 6));
        const std::int64_t glo = std::max<std::int64_t>(1, base - (wl << 6) - 63);
        if (glo > ghi) continue;
        if (!occ(wl) && !occ(wl + 1)) continue;
        bool upper = false;
        for (std::int64_t u = (base + glo) >> 6;
             u <= (base + ghi + 63) >> 6 && !upper; ++u)
          upper = occ(u);
        if (!upper) continue;
        for (std::int64_t g = glo; g <= ghi; ++g) {
          const std::uint64_t m =
              mid & bits.window(base - g) & bits.window(base + g);
          count += static_cast<std::uint64_t>(std::popcount(m));
        }
      }
    }
  }
  return count;
}

std::uint64_t count_3aps_naive(const CandidateSet& s) {
  const auto& e = s.elements;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t k = i + 1; k < e.size(); ++k) {
      const std::int64_t sum = e[i] + e[k];
      if (sum % 2 != 0) continue;
      if (std::binary_search(e.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             e.begin() + static_cast<std::ptrdiff_t>(k),
                             sum / 2))
        ++count;
    }
  }
  return count;
}

std::uint64_t full_interval_3ap_count(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("full_interval_3ap_count: n < 0");
  // sum over gaps g of max(0, n - 2g)
  const std::uint64_t h = static_cast<std::uint64_t>(n) / 2;
  if (n % 2 == 0) return h * (h - (h > 0 ? 1 : 0));
  return h * h;
}

std::vector<ApTriple> enumerate_3aps(const CandidateSet& s, std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("enumerate_3aps: cap < 0");
  std::vector<ApTriple> out;
  if (cap == 0) return out;
  const auto& e = s.elements;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const std::int64_t c = 2 * e[j] - e[i];
      if (c > s.n_limit) break;
      if (std::binary_search(e.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                             e.end(), c)) {
        out.push_back({e[i], e[j], c});
        if (static_cast<std::int64_t>(out.size()) >= cap) return out;
      }
    }
  }
  return out;
}

bool verify_ap_free(CandidateSet& s) {
  s.certified_ap_free = count_3aps(s) == 0;
  return s.certified_ap_free;
}

CandidateSet greedy_delete_to_ap_free(const CandidateSet& s) {
  const std::uint64_t total = count_3aps(s);
  if (total > 20'000'000ull)
    throw std::runtime_error(
        "greedy_delete_to_ap_free: too many progressions to materialize");

  const auto& e = s.elements;
  const std::size_t m = e.size();

  struct Triple {
    std::int32_t i, j, k;
    bool alive = true;
  };
  std::vector<Triple> triples;
  triples.reserve(static_cast<std::size_t>(total));
  std::vector<std::vector<std::int32_t>> member_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::int64_t c = 2 * e[j] - e[i];
      if (c > s.n_limit) break;
      const auto it = std::lower_bound(
          e.begin() + static_cast<std::ptrdiff_t>(j) + 1, e.end(), c);
      if (it != e.end() && *it == c) {
        const auto k = static_cast<std::size_t>(it - e.begin());
        const auto id = static_cast<std::int32_t>(triples.size());
        triples.push_back({static_cast<std::int32_t>(i),
                           static_cast<std::int32_t>(j),
                           static_cast<std::int32_t>(k)});
        member_of[i].push_back(id);
        member_of[j].push_back(id);
        member_of[k].push_back(id);
      }
    }
  }

  std::vector<std::int64_t> degree(m, 0);
  for (const auto& t : triples) {
    ++degree[static_cast<std::size_t>(t.i)];
    ++degree[static_cast<std::size_t>(t.j)];
    ++degree[static_cast<std::size_t>(t.k)];
  }

  std::vector<char> alive(m, 1);
  for (;;) {
    // strict > keeps the first maximum, i.e. the smallest element, on ties
    std::size_t victim = m;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (alive[i] && degree[i] > best) {
        best = degree[i];
        victim = i;
      }
    if (victim == m) break;

    alive[victim] = 0;
    degree[victim] = 0;
    for (const std::int32_t id : member_of[victim]) {
      auto& t = triples[static_cast<std::size_t>(id)];
      if (!t.alive) continue;
      t.alive = false;
      for (const std::int32_t member : {t.i, t.j, t.k})
        if (alive[static_cast<std::size_t>(member)])
          --degree[static_cast<std::size_t>(member)];
    }
  }

  std::vector<std::int64_t> kept;
  kept.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) kept.push_back(e[i]);

  CandidateSet out = CandidateSet::from_elements(s.n_limit, std::move(kept));
  if (!verify_ap_free(out))
    throw std::logic_error(
        "greedy_delete_to_ap_free: result failed certification");
  return out;
}

bool check_difference_norm_bound(const Eigen::ArrayXd& x,
                                 const Eigen::ArrayXd& y,
                                 const AnnulusSpec& spec) {
  if (x.size() != spec.d || y.size() != spec.d)
    throw std::invalid_argument("check_difference_norm_bound: dimension mismatch");
  const Eigen::ArrayXd lo = x - y;
  const Eigen::ArrayXd hi = x + y;
  if (!annulus_contains(lo, spec) || !annulus_contains(x, spec) ||
      !annulus_contains(hi, spec))
    throw precondition_error(
        "check_difference_norm_bound: x-y, x, x+y must all lie in the annulus");
  return y.matrix().norm() <= std::sqrt(2.0 * spec.delta * spec.r);
}

}  // namespace apfree
