#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "qaplin/permutation.hpp"

namespace qaplin {

/// SplitMix64 (Steele, Lea & Vigna). Fixed published constants so that a
/// seed reproduces the same stream on every platform; used for all instance
/// generation and sampling in this library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) via multiply-shift: the high 64 bits of
  /// next() * bound, computed with a portable 32-bit split.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t x = next();
    const std::uint64_t xl = x & 0xFFFFFFFFULL, xh = x >> 32;
    const std::uint64_t bl = bound & 0xFFFFFFFFULL, bh = bound >> 32;
    const std::uint64_t mid = (xl * bl >> 32) + (xh * bl & 0xFFFFFFFFULL) + (xl * bh & 0xFFFFFFFFULL);
    return xh * bh + (xh * bl >> 32) + (xl * bh >> 32) + (mid >> 32);
  }

  double next_real(double lo, double hi) { return lo + next_double() * (hi - lo); }

  /// Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates shuffle of the identity, consuming one draw per position.
inline Permutation random_permutation(int n, SplitMix64& gen) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(im[i], im[j]);
  }
  return Permutation(std::move(im));
}

}  // namespace qaplin
