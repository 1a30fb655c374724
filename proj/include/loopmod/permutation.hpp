#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "loopmod/error.hpp"

namespace loopmod {

/// Bijection on the points [0, n). Immutable after construction.
class Permutation {
public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(images_.size(), false);
    for (int x = 0; x < n; ++x) {
      const int y = images_[x];
      if (y < 0 || y >= n)
        throw Error(Errc::not_bijective,
                    "image " + std::to_string(y) + " of point " + std::to_string(x) +
                        " is out of range [0," + std::to_string(n) + ")");
      if (seen[y])
        throw Error(Errc::not_bijective, "value " + std::to_string(y) + " appears twice");
      seen[y] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }

  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int x = 0; x < size(); ++x)
      if (images_[static_cast<std::size_t>(x)] != x) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < size(); ++x) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<int> images_;
};

/// Function composition: compose(f, g)(x) = f(g(x)).
inline Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size())
    throw Error(Errc::size_mismatch, "composing permutations of sizes " +
                                         std::to_string(f.size()) + " and " +
                                         std::to_string(g.size()));
  std::vector<int> im(static_cast<std::size_t>(f.size()));
  for (int x = 0; x < f.size(); ++x) im[static_cast<std::size_t>(x)] = f(g(x));
  return Permutation(std::move(im));
}

} // namespace loopmod
