#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopmod/error.hpp"
#include "loopmod/permutation.hpp"

namespace loopmod {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Result of the exhaustive associativity scan: either the marker "associative"
/// or the lexicographically first triple with (a*b)*c != a*(b*c).
struct AssociativityWitness {
  struct Violation {
    int a, b, c;
    int left_product;  // (a*b)*c
    int right_product; // a*(b*c)
  };
  std::optional<Violation> violation;

  bool associative() const { return !violation.has_value(); }
};

/// Finite loop of order n: an n-by-n Latin square over [0, n) together with a
/// two-sided identity element. Immutable once validated; all operations are
/// pure and safe to share across threads.
class LoopTable {
public:
  /// Checks the Latin property of rows and columns and locates the identity.
  /// With no hint the unique two-sided identity is auto-detected.
  static LoopTable validate(const std::vector<std::vector<int>>& raw,
                            std::optional<int> identity_hint = std::nullopt) {
    const int n = static_cast<int>(raw.size());
    if (n < 1) throw Error(Errc::length_mismatch, "empty table");
    for (int r = 0; r < n; ++r)
      if (static_cast<int>(raw[static_cast<std::size_t>(r)].size()) != n)
        throw Error(Errc::length_mismatch,
                    "row " + std::to_string(r) + " has " +
                        std::to_string(raw[static_cast<std::size_t>(r)].size()) +
                        " entries, expected " + std::to_string(n));

    std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const int v = raw[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (v < 0 || v >= n)
          throw Error(Errc::entry_out_of_range,
                      "entry " + std::to_string(v) + " at (" + std::to_string(r) + "," +
                          std::to_string(c) + ") is outside [0," + std::to_string(n) + ")");
        cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] = v;
      }

    // Latin property; report the first offending row, then column.
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), false);
      for (int c = 0; c < n; ++c) {
        const int v = cells[static_cast<std::size_t>(r * n + c)];
        if (seen[static_cast<std::size_t>(v)])
          throw Error(Errc::not_latin,
                      "row " + std::to_string(r) + " repeats value " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
    for (int c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), false);
      for (int r = 0; r < n; ++r) {
        const int v = cells[static_cast<std::size_t>(r * n + c)];
        if (seen[static_cast<std::size_t>(v)])
          throw Error(Errc::not_latin,
                      "column " + std::to_string(c) + " repeats value " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
      }
    }

    auto is_identity_element = [&](int e) {
      for (int x = 0; x < n; ++x) {
        if (cells[static_cast<std::size_t>(e * n + x)] != x) return false;
        if (cells[static_cast<std::size_t>(x * n + e)] != x) return false;
      }
      return true;
    };

    int identity = -1;
    if (identity_hint) {
      if (*identity_hint < 0 || *identity_hint >= n)
        throw Error(Errc::index_out_of_range,
                    "identity hint " + std::to_string(*identity_hint) + " out of range");
      if (!is_identity_element(*identity_hint))
        throw Error(Errc::no_identity, "element " + std::to_string(*identity_hint) +
                                           " is not a two-sided identity");
      identity = *identity_hint;
    } else {
      for (int e = 0; e < n && identity < 0; ++e)
        if (is_identity_element(e)) identity = e;
      if (identity < 0) throw Error(Errc::no_identity, "no two-sided identity element");
    }
    return LoopTable(n, identity, std::move(cells));
  }

  int order() const { return order_; }
  int identity() const { return identity_; }

  int mul(int a, int b) const {
    check_index(a);
    check_index(b);
    return cells_[static_cast<std::size_t>(a * order_ + b)];
  }

  /// left: the unique x with a*x = b.  right: the unique y with y*a = b.
  int divide(Side side, int a, int b) const {
    check_index(a);
    check_index(b);
    if (side == Side::left) {
      for (int x = 0; x < order_; ++x)
        if (cells_[static_cast<std::size_t>(a * order_ + x)] == b) return x;
    } else {
      for (int y = 0; y < order_; ++y)
        if (cells_[static_cast<std::size_t>(y * order_ + a)] == b) return y;
    }
    throw Error(Errc::not_latin, "division failed; table is not a loop"); // unreachable on valid tables
  }

  /// L_a (row a) or R_a (column a) as a permutation.
  Permutation translation(Side side, int a) const {
    check_index(a);
    std::vector<int> im(static_cast<std::size_t>(order_));
    if (side == Side::left) {
      for (int x = 0; x < order_; ++x) im[static_cast<std::size_t>(x)] = cells_[static_cast<std::size_t>(a * order_ + x)];
    } else {
      for (int x = 0; x < order_; ++x) im[static_cast<std::size_t>(x)] = cells_[static_cast<std::size_t>(x * order_ + a)];
    }
    return Permutation(std::move(im));
  }

  /// Deviation map of the pair (a,b): the unique permutation with
  /// L_a o L_b = deviation(a,b) o L_{a*b}. Identity exactly when the
  /// corresponding associations hold; fixes the point a*b.
  Permutation deviation(int a, int b) const {
    check_index(a);
    check_index(b);
    const Permutation inv_ab = translation(Side::left, mul(a, b)).inverse();
    std::vector<int> im(static_cast<std::size_t>(order_));
    for (int x = 0; x < order_; ++x) {
      const int y = inv_ab(x);
      im[static_cast<std::size_t>(x)] =
          cells_[static_cast<std::size_t>(a * order_ + cells_[static_cast<std::size_t>(b * order_ + y)])];
    }
    return Permutation(std::move(im));
  }

  /// Exhaustive scan of all n^3 triples in lexicographic order.
  AssociativityWitness associativity_witness() const {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b) {
        const int ab = cells_[static_cast<std::size_t>(a * order_ + b)];
        for (int c = 0; c < order_; ++c) {
          const int lhs = cells_[static_cast<std::size_t>(ab * order_ + c)];
          const int rhs = cells_[static_cast<std::size_t>(
              a * order_ + cells_[static_cast<std::size_t>(b * order_ + c)])];
          if (lhs != rhs) return AssociativityWitness{{{a, b, c, lhs, rhs}}};
        }
      }
    return AssociativityWitness{};
  }

  /// Rewrites the table under the relabeling sigma: the product of sigma(a)
  /// and sigma(b) becomes sigma(a*b). The identity moves to sigma(identity).
  LoopTable relabel(const Permutation& sigma) const {
    if (sigma.size() != order_)
      throw Error(Errc::size_mismatch, "relabeling size does not match loop order");
    std::vector<int> cells(cells_.size());
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        cells[static_cast<std::size_t>(sigma(a) * order_ + sigma(b))] =
            sigma(cells_[static_cast<std::size_t>(a * order_ + b)]);
    return LoopTable(order_, sigma(identity_), std::move(cells));
  }

  /// Lexicographically smallest relabeling that puts the identity at 0.
  /// Two loops are isomorphic iff their canonical forms are equal.
  /// Searches all (n-1)! relabelings; supported for order <= 7 only.
  LoopTable canonical_form() const {
    if (order_ > 7)
      throw Error(Errc::unsupported,
                  "canonical_form supports order <= 7, got " + std::to_string(order_));
    std::vector<int> others;
    for (int x = 0; x < order_; ++x)
      if (x != identity_) others.push_back(x);
    std::vector<int> labels(others.size());
    std::iota(labels.begin(), labels.end(), 1);

    std::vector<int> best;
    std::vector<int> sigma(static_cast<std::size_t>(order_));
    std::vector<int> candidate(cells_.size());
    do {
      sigma[static_cast<std::size_t>(identity_)] = 0;
      for (std::size_t i = 0; i < others.size(); ++i)
        sigma[static_cast<std::size_t>(others[i])] = labels[i];
      for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
          candidate[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a)] * order_ +
                                             sigma[static_cast<std::size_t>(b)])] =
              sigma[static_cast<std::size_t>(cells_[static_cast<std::size_t>(a * order_ + b)])];
      if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return LoopTable(order_, 0, std::move(best));
  }

  /// Row-major cells; the canonical comparison key.
  const std::vector<int>& cells() const { return cells_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
    for (int r = 0; r < order_; ++r)
      out[static_cast<std::size_t>(r)] =
          std::vector<int>(cells_.begin() + static_cast<std::ptrdiff_t>(r) * order_,
                           cells_.begin() + static_cast<std::ptrdiff_t>(r + 1) * order_);
    return out;
  }

  friend bool operator==(const LoopTable& a, const LoopTable& b) = default;

  /// Trusted constructor for callers that guarantee the invariants hold
  /// (the enumerator's backtracker builds Latin squares by construction).
  static LoopTable unchecked(int order, int identity, std::vector<int> cells) {
    return LoopTable(order, identity, std::move(cells));
  }

private:
  LoopTable(int order, int identity, std::vector<int> cells)
      : order_(order), identity_(identity), cells_(std::move(cells)) {}

  void check_index(int x) const {
    if (x < 0 || x >= order_)
      throw Error(Errc::index_out_of_range,
                  "element " + std::to_string(x) + " out of range [0," + std::to_string(order_) + ")");
  }

  int order_;
  int identity_;
  std::vector<int> cells_;
};

} // namespace loopmod
