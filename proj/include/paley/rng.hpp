#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace paley {

// xoshiro256** seeded through splitmix64.  We roll our own generator so that
// seeded runs reproduce bit-for-bit across platforms and standard libraries
// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  uint64_t next() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, bound) by rejection; bound > 0
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

// Sorted k-subset of {0,...,n-1} by Floyd's algorithm.
inline std::vector<int> sample_subset(Rng& rng, int n, int k) {
  std::vector<int> out;
  out.reserve(k);
  for (int j = n - k; j < n; ++j) {
    int t = static_cast<int>(rng.below(static_cast<uint64_t>(j) + 1));
    bool present = false;
    for (int v : out)
      if (v == t) present = true;
    out.push_back(present ? j : t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace paley
