#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopmod/error.hpp"
#include "loopmod/loop_table.hpp"

namespace loopmod {

/// Exhaustive generation of the loops of one small order.
///
/// normalized mode emits every table with identity 0 and first row/column in
/// natural order (the reduced Latin squares that are loops), in lexicographic
/// order of the concatenated rows. up_to_isomorphism additionally
/// canonicalizes and deduplicates, emitting one representative per class in
/// lexicographic order of canonical forms.
struct EnumerationConfig {
  enum class Mode { normalized, up_to_isomorphism };

  int order = 1;
  Mode mode = Mode::normalized;
  std::optional<long long> limit;
  std::vector<int> row1_prefix; // fixed values for cells (1,1), (1,2), ... of row 1
};

namespace detail {

// Row-major backtracker over the free cells (r,c), r,c >= 1. Row and column
// feasibility via used-value bitmasks; candidates tried in ascending order,
// so completions appear lexicographically.
class ReducedLoopSearch {
public:
  ReducedLoopSearch(int n, const std::function<bool(const LoopTable&)>& sink)
      : n_(n), sink_(sink), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)),
        row_used_(static_cast<std::size_t>(n)), col_used_(static_cast<std::size_t>(n)) {
    for (int c = 0; c < n_; ++c) cells_[static_cast<std::size_t>(c)] = c; // row 0
    for (int r = 0; r < n_; ++r) cells_[static_cast<std::size_t>(r * n_)] = r; // column 0
    for (int r = 0; r < n_; ++r) row_used_[static_cast<std::size_t>(r)] = 1u << r;
    for (int c = 0; c < n_; ++c) col_used_[static_cast<std::size_t>(c)] = 1u << c;
    // row 0 and column 0 are fully placed
    row_used_[0] = full_mask();
    col_used_[0] = full_mask();
  }

  // Returns false if a prefix value cannot be placed.
  bool place_prefix(const std::vector<int>& prefix) {
    if (n_ < 2) return prefix.empty();
    if (static_cast<int>(prefix.size()) > n_ - 1) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int c = 1 + static_cast<int>(i);
      const int v = prefix[i];
      if (v < 0 || v >= n_) return false;
      const std::uint32_t bit = 1u << v;
      if ((row_used_[1] | col_used_[static_cast<std::size_t>(c)]) & bit) return false;
      cells_[static_cast<std::size_t>(n_ + c)] = v;
      row_used_[1] |= bit;
      col_used_[static_cast<std::size_t>(c)] |= bit;
    }
    prefix_len_ = static_cast<int>(prefix.size());
    return true;
  }

  // Runs the search; returns false when the sink asked to stop.
  bool run() {
    if (n_ == 1) return sink_(LoopTable::unchecked(1, 0, {0}));
    return fill(1, 1 + prefix_len_);
  }

private:
  std::uint32_t full_mask() const { return (n_ >= 32) ? ~0u : ((1u << n_) - 1u); }

  bool fill(int r, int c) {
    if (c == n_) {
      ++r;
      c = 1;
    }
    if (r == n_) return sink_(LoopTable::unchecked(n_, 0, cells_));
    std::uint32_t avail = full_mask() & ~(row_used_[static_cast<std::size_t>(r)] |
                                          col_used_[static_cast<std::size_t>(c)]);
    while (avail) {
      const std::uint32_t bit = avail & (~avail + 1u); // lowest set bit
      avail ^= bit;
      const int v = std::countr_zero(bit);
      cells_[static_cast<std::size_t>(r * n_ + c)] = v;
      row_used_[static_cast<std::size_t>(r)] |= bit;
      col_used_[static_cast<std::size_t>(c)] |= bit;
      const bool keep_going = fill(r, c + 1);
      row_used_[static_cast<std::size_t>(r)] &= ~bit;
      col_used_[static_cast<std::size_t>(c)] &= ~bit;
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  const std::function<bool(const LoopTable&)>& sink_;
  std::vector<int> cells_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
  int prefix_len_ = 0;
};

} // namespace detail

/// Emits every loop selected by the config to the sink and returns the exact
/// count of emitted loops. Deterministic emission order in both modes.
inline long long enumerate_loops(const EnumerationConfig& cfg,
                                 const std::function<void(const LoopTable&)>& sink) {
  const int n = cfg.order;
  if (n < 1 || n > 16)
    throw Error(Errc::unsupported_order, "order " + std::to_string(n) + " is outside [1,16]");
  if (cfg.mode == EnumerationConfig::Mode::up_to_isomorphism && n > 7)
    throw Error(Errc::unsupported_order,
                "isomorphism mode supports order <= 7, got " + std::to_string(n));
  if (cfg.limit && *cfg.limit < 1)
    throw Error(Errc::invalid_config, "limit must be >= 1 when present");
  if (!cfg.row1_prefix.empty() && n < 2)
    throw Error(Errc::invalid_prefix, "order " + std::to_string(n) + " has no row 1");

  long long emitted = 0;
  if (cfg.mode == EnumerationConfig::Mode::normalized) {
    std::function<bool(const LoopTable&)> consume = [&](const LoopTable& loop) {
      sink(loop);
      ++emitted;
      return !(cfg.limit && emitted >= *cfg.limit);
    };
    detail::ReducedLoopSearch search(n, consume);
    if (!search.place_prefix(cfg.row1_prefix))
      throw Error(Errc::invalid_prefix, "prefix is not a feasible start of row 1");
    search.run();
    return emitted;
  }

  std::set<std::vector<int>> canonical_keys;
  std::function<bool(const LoopTable&)> consume = [&](const LoopTable& loop) {
    canonical_keys.insert(loop.canonical_form().cells());
    return true;
  };
  detail::ReducedLoopSearch search(n, consume);
  if (!search.place_prefix(cfg.row1_prefix))
    throw Error(Errc::invalid_prefix, "prefix is not a feasible start of row 1");
  search.run();
  for (const std::vector<int>& key : canonical_keys) {
    if (cfg.limit && emitted >= *cfg.limit) break;
    sink(LoopTable::unchecked(n, 0, key));
    ++emitted;
  }
  return emitted;
}

/// Count-only convenience.
inline long long count_loops(int order, EnumerationConfig::Mode mode) {
  EnumerationConfig cfg;
  cfg.order = order;
  cfg.mode = mode;
  return enumerate_loops(cfg, [](const LoopTable&) {});
}

} // namespace loopmod
