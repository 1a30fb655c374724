#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopmod/error.hpp"
#include "loopmod/loop_table.hpp"

namespace loopmod {

namespace detail {

// Signed product of octonion basis units e_0..e_7. Lines of the Fano plane on
// the indices 1..7 are {t, t+1, t+3} (arithmetic mod 7 folded back into 1..7),
// oriented cyclically as (t, t+1, t+3); reversing a pair flips the sign.
inline std::pair<int, int> octonion_basis_product(int i, int j) {
  if (i == 0) return {+1, j};
  if (j == 0) return {+1, i};
  if (i == j) return {-1, 0};
  auto fold = [](int v) { return (v - 1) % 7 + 1; };
  for (int t = 1; t <= 7; ++t) {
    const std::array<int, 3> line = {t, fold(t + 1), fold(t + 3)};
    for (int k = 0; k < 3; ++k) {
      const int a = line[static_cast<std::size_t>(k)];
      const int b = line[static_cast<std::size_t>((k + 1) % 3)];
      const int c = line[static_cast<std::size_t>((k + 2) % 3)];
      if (i == a && j == b) return {+1, c};
      if (i == b && j == a) return {-1, c};
    }
  }
  throw Error(Errc::unsupported, "indices " + std::to_string(i) + "," + std::to_string(j) +
                                     " lie on no Fano line");
}

// Elements 0..15 encode the signed units: sign -1 iff k >= 8, basis index
// k mod 8, with element 0 = +e_0 the identity.
inline std::vector<std::vector<int>> octonion16_table() {
  std::vector<std::vector<int>> table(16, std::vector<int>(16));
  for (int k1 = 0; k1 < 16; ++k1)
    for (int k2 = 0; k2 < 16; ++k2) {
      const int sign1 = k1 < 8 ? +1 : -1;
      const int sign2 = k2 < 8 ? +1 : -1;
      const auto [sign0, index] = octonion_basis_product(k1 % 8, k2 % 8);
      const int sign = sign0 * sign1 * sign2;
      table[static_cast<std::size_t>(k1)][static_cast<std::size_t>(k2)] =
          sign > 0 ? index : index + 8;
    }
  return table;
}

} // namespace detail

/// Named fixture loops: "cyclic:n" (the cyclic group Z_n), "q5_nonassoc"
/// (the order-5 nonassociative fixture), "octonion16" (the signed octonion
/// basis units, a nonassociative Moufang loop of order 16).
inline LoopTable builtin_loop(std::string_view name) {
  if (name.rfind("cyclic:", 0) == 0) {
    const std::string arg(name.substr(7));
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1 || n > 64)
      throw Error(Errc::unknown_builtin, "bad cyclic order '" + arg + "' (want 1..64)");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return LoopTable::validate(table);
  }
  if (name == "q5_nonassoc") {
    return LoopTable::validate({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 3, 4, 0, 1},
                                {3, 4, 1, 2, 0},
                                {4, 2, 0, 1, 3}});
  }
  if (name == "octonion16") return LoopTable::validate(detail::octonion16_table());
  throw Error(Errc::unknown_builtin, "unknown builtin loop '" + std::string(name) + "'");
}

} // namespace loopmod
