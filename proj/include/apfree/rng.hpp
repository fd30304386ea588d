#pragma once

#include <array>
#include <cstdint>

namespace apfree {

// SplitMix64, used for seeding and stream derivation.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t mix64(std::uint64_t x) {
  SplitMix64 sm{x};
  return sm.next();
}

// xoshiro256**. Substreams are derived from (seed, stream) so parallel
// workers can draw independent sequences that do not depend on scheduling.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) : Xoshiro256ss(seed, 0) {}

  Xoshiro256ss(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 sm{mix64(seed) ^ mix64(stream ^ 0xD1B54A32D192ED03ull)};
    for (auto& w : s_) w = sm.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0,1) with 53 random bits. Avoids
  // std::uniform_real_distribution, whose output is implementation-defined.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace apfree
