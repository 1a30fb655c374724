#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "loopmod/error.hpp"
#include "loopmod/loop_table.hpp"
#include "loopmod/permutation.hpp"
#include "loopmod/rational.hpp"

namespace loopmod {

/// Strictly positive rational weight per point: a full-support measure on the
/// discrete space [0, n). Full support makes every bijection quasi-invariant,
/// so density quotients below are always defined.
class Measure {
public:
  static Measure validate(std::vector<Rational> weights, int order) {
    if (static_cast<int>(weights.size()) != order)
      throw Error(Errc::length_mismatch, "measure has " + std::to_string(weights.size()) +
                                             " weights, loop order is " + std::to_string(order));
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] <= 0)
        throw Error(Errc::nonpositive_weight,
                    "weight " + format_rational(weights[i]) + " at index " + std::to_string(i) +
                        " is not positive");
    return Measure(std::move(weights));
  }

  /// Counting measure: weight 1 on every point.
  static Measure uniform(int order) {
    return Measure(std::vector<Rational>(static_cast<std::size_t>(order), Rational(1)));
  }

  int size() const { return static_cast<int>(weights_.size()); }

  const Rational& operator[](int x) const { return weights_[static_cast<std::size_t>(x)]; }

  const std::vector<Rational>& weights() const { return weights_; }

  bool is_uniform() const {
    for (const Rational& w : weights_)
      if (w != weights_.front()) return false;
    return true;
  }

  Rational total() const {
    Rational t = 0;
    for (const Rational& w : weights_) t += w;
    return t;
  }

private:
  explicit Measure(std::vector<Rational> weights) : weights_(std::move(weights)) {}
  std::vector<Rational> weights_;
};

/// Pointwise density of a pushforward against the base measure.
using DensityVector = std::vector<Rational>;

/// Density of f_*mu against mu: values[x] = mu(f^{-1} x) / mu(x).
inline DensityVector rn_derivative(const Permutation& f, const Measure& mu) {
  if (f.size() != mu.size())
    throw Error(Errc::size_mismatch, "permutation size " + std::to_string(f.size()) +
                                         " does not match measure size " +
                                         std::to_string(mu.size()));
  const Permutation inv = f.inverse();
  DensityVector values(static_cast<std::size_t>(mu.size()));
  for (int x = 0; x < mu.size(); ++x)
    values[static_cast<std::size_t>(x)] = mu[inv(x)] / mu[x];
  return values;
}

/// Modular cocycle grid: entries[a][x] is the density of the pushforward of mu
/// under the translation by a (left or right). Row identity is all ones.
struct CocycleTable {
  Side kind = Side::left;
  int order = 0;
  std::vector<Rational> entries; // row-major, entries[a*order + x]

  const Rational& at(int a, int x) const {
    return entries[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                   static_cast<std::size_t>(x)];
  }

  bool all_ones() const {
    for (const Rational& e : entries)
      if (e != 1) return false;
    return true;
  }
};

inline CocycleTable cocycle_table(const LoopTable& loop, const Measure& mu, Side kind) {
  if (mu.size() != loop.order())
    throw Error(Errc::size_mismatch, "measure size " + std::to_string(mu.size()) +
                                         " does not match loop order " +
                                         std::to_string(loop.order()));
  CocycleTable table;
  table.kind = kind;
  table.order = loop.order();
  table.entries.reserve(static_cast<std::size_t>(loop.order()) * static_cast<std::size_t>(loop.order()));
  for (int a = 0; a < loop.order(); ++a) {
    DensityVector row = rn_derivative(loop.translation(kind, a), mu);
    for (Rational& v : row) table.entries.push_back(std::move(v));
  }
  return table;
}

/// Density of the deviation map of (a,b): the correction term in the
/// deviation-corrected cocycle relation.
inline DensityVector deviation_jacobian(const LoopTable& loop, const Measure& mu, int a, int b) {
  if (mu.size() != loop.order())
    throw Error(Errc::size_mismatch, "measure size does not match loop order");
  return rn_derivative(loop.deviation(a, b), mu);
}

/// Measure file format: one rational per line as "p" or "p/q"; '#' comments.
inline std::vector<Rational> read_measure_weights(std::istream& in) {
  std::vector<Rational> weights;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) weights.push_back(parse_rational(tok));
  }
  return weights;
}

inline Measure read_measure_file(const std::string& path, int order) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_file, "cannot open measure file '" + path + "'");
  return Measure::validate(read_measure_weights(in), order);
}

inline void write_measure(std::ostream& out, const Measure& mu) {
  for (int x = 0; x < mu.size(); ++x) out << format_rational(mu[x]) << '\n';
}

} // namespace loopmod
