#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "qaplin/matrix.hpp"

namespace qaplin {

/// Bijection on {0, ..., n-1}; images() holds p(0), ..., p(n-1).
/// External formats print images 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw DomainError("Permutation: order must be >= 1");
    std::vector<char> seen(n, 0);
    for (int v : images_) {
      if (v < 0 || v >= n || seen[v]) throw DomainError("Permutation: images are not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  static Permutation from_one_based(std::vector<int> images) {
    for (int& v : images) --v;
    return Permutation(std::move(images));
  }

  int order() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < order(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  std::vector<int> to_one_based() const {
    std::vector<int> m = images_;
    for (int& v : m) ++v;
    return m;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// k-fold cyclic shift: the image sequence rotated left by k, so
/// shift(p,1)(i) = p(i+1) and shift(p,1)(n-1) = p(0). Requires 0 <= k < n.
inline Permutation cyclic_shift(const Permutation& p, int k) {
  const int n = p.order();
  if (k < 0 || k >= n) throw DomainError("cyclic_shift: k must satisfy 0 <= k <= n-1");
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = p((i + k) % n);
  return Permutation(std::move(im));
}

/// Calls fn with every image vector of S_n in lexicographic order until fn
/// returns false. fn receives the raw 0-based image vector.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    if (!fn(static_cast<const std::vector<int>&>(images))) return;
  } while (std::next_permutation(images.begin(), images.end()));
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace qaplin
