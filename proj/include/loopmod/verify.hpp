#pragma once

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopmod/error.hpp"
#include "loopmod/identity.hpp"
#include "loopmod/loop_table.hpp"
#include "loopmod/measure.hpp"
#include "loopmod/parallel.hpp"
#include "loopmod/permutation.hpp"
#include "loopmod/rational.hpp"

namespace loopmod {

/// One failed case of a verifier: the case index (e.g. (a,b,x)), both
/// evaluated sides, and a short label distinguishing sub-checks.
struct CaseFailure {
  std::vector<int> index;
  Rational lhs;
  Rational rhs;
  std::string detail;
};

/// Outcome of an exhaustive verifier run. At most 100 failures are stored;
/// the counters stay exact.
struct VerificationReport {
  static constexpr std::size_t kMaxStoredFailures = 100;

  std::string statement;
  long long total_cases = 0;
  long long failure_count = 0;
  std::vector<CaseFailure> failures;

  bool pass() const { return failure_count == 0; }

  void check(std::vector<int> index, const Rational& lhs, const Rational& rhs,
             std::string detail = {}) {
    ++total_cases;
    if (lhs != rhs) {
      ++failure_count;
      if (failures.size() < kMaxStoredFailures)
        failures.push_back({std::move(index), lhs, rhs, std::move(detail)});
    }
  }

  /// Associative merge; `other` must cover cases that follow this report's
  /// cases in the global order.
  void merge(VerificationReport&& other) {
    total_cases += other.total_cases;
    failure_count += other.failure_count;
    for (CaseFailure& f : other.failures) {
      if (failures.size() >= kMaxStoredFailures) break;
      failures.push_back(std::move(f));
    }
  }
};

/// Two-factor chain rule for densities: the density of (f o g)_* mu equals
/// the density of f at x times the density of g at f^{-1} x, exactly.
inline VerificationReport verify_chain_rule(const Permutation& f, const Permutation& g,
                                            const Measure& mu) {
  if (f.size() != mu.size() || g.size() != mu.size())
    throw Error(Errc::size_mismatch, "chain rule sizes do not match");
  VerificationReport rep;
  rep.statement = "chain-rule";
  const DensityVector rn_fg = rn_derivative(compose(f, g), mu);
  const DensityVector rn_f = rn_derivative(f, mu);
  const DensityVector rn_g = rn_derivative(g, mu);
  const Permutation f_inv = f.inverse();
  for (int x = 0; x < mu.size(); ++x)
    rep.check({x}, rn_fg[static_cast<std::size_t>(x)],
              rn_f[static_cast<std::size_t>(x)] * rn_g[static_cast<std::size_t>(f_inv(x))]);
  return rep;
}

/// Every translation of the loop followed by every deviation map:
/// L_0..L_{n-1}, R_0..R_{n-1}, then the deviations in (a,b) order.
inline std::vector<Permutation> translation_family(const LoopTable& loop) {
  std::vector<Permutation> family;
  const int n = loop.order();
  family.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 2));
  for (int a = 0; a < n; ++a) family.push_back(loop.translation(Side::left, a));
  for (int a = 0; a < n; ++a) family.push_back(loop.translation(Side::right, a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) family.push_back(loop.deviation(a, b));
  return family;
}

/// Chain rule over all ordered pairs from the translation family. Failure
/// indices are (f, g, x) with f, g indexing the family.
inline VerificationReport verify_chain_rule_family(const LoopTable& loop, const Measure& mu) {
  const std::vector<Permutation> family = translation_family(loop);
  VerificationReport rep;
  rep.statement = "chain-rule";
  for (std::size_t fi = 0; fi < family.size(); ++fi)
    for (std::size_t gi = 0; gi < family.size(); ++gi) {
      VerificationReport one = verify_chain_rule(family[fi], family[gi], mu);
      for (CaseFailure& f : one.failures)
        f.index.insert(f.index.begin(), {static_cast<int>(fi), static_cast<int>(gi)});
      rep.merge(std::move(one));
    }
  return rep;
}

/// Deviation-corrected cocycle relation, both displayed forms, checked
/// exactly over all (a,b,x). The case space is partitioned along the a-axis
/// across workers; partial reports merge in axis order, so the failure list
/// stays lexicographic.
inline VerificationReport verify_cocycle_relation(const LoopTable& loop, const Measure& mu) {
  if (mu.size() != loop.order())
    throw Error(Errc::size_mismatch, "measure size does not match loop order");
  const int n = loop.order();
  const CocycleTable lambda = cocycle_table(loop, mu, Side::left);

  auto work = [&](int a_begin, int a_end) {
    VerificationReport rep;
    rep.statement = "cocycle-relation";
    for (int a = a_begin; a < a_end; ++a) {
      const Permutation la_inv = loop.translation(Side::left, a).inverse();
      for (int b = 0; b < n; ++b) {
        const int ab = loop.mul(a, b);
        const Permutation phi = loop.deviation(a, b);
        const Permutation phi_inv = phi.inverse();
        const DensityVector jac = rn_derivative(phi, mu);
        for (int x = 0; x < n; ++x) {
          rep.check({a, b, x}, lambda.at(a, x) * lambda.at(b, la_inv(x)),
                    jac[static_cast<std::size_t>(x)] * lambda.at(ab, phi_inv(x)), "form1");
          const int y = phi(x);
          rep.check({a, b, x}, lambda.at(a, y) * lambda.at(b, la_inv(y)),
                    jac[static_cast<std::size_t>(y)] * lambda.at(ab, x), "form2");
        }
      }
    }
    return rep;
  };

  const int workers = worker_count();
  if (workers <= 1 || n < 8) return work(0, n);
  std::vector<VerificationReport> parts =
      run_chunks<VerificationReport>(n, workers, [&](int b, int e) { return work(b, e); });
  VerificationReport rep;
  rep.statement = "cocycle-relation";
  for (VerificationReport& p : parts) rep.merge(std::move(p));
  return rep;
}

/// Pairs whose deviation map is the identity, plus the untwisted relation
/// verified on exactly those pairs.
struct RigidityResult {
  std::vector<std::pair<int, int>> untwisted_pairs; // lexicographic
  VerificationReport report;
};

inline RigidityResult rigidity_report(const LoopTable& loop, const Measure& mu) {
  if (mu.size() != loop.order())
    throw Error(Errc::size_mismatch, "measure size does not match loop order");
  const int n = loop.order();
  const CocycleTable lambda = cocycle_table(loop, mu, Side::left);
  RigidityResult result;
  result.report.statement = "rigidity";
  for (int a = 0; a < n; ++a) {
    const Permutation la_inv = loop.translation(Side::left, a).inverse();
    for (int b = 0; b < n; ++b) {
      if (!loop.deviation(a, b).is_identity()) continue;
      result.untwisted_pairs.emplace_back(a, b);
      const int ab = loop.mul(a, b);
      for (int x = 0; x < n; ++x)
        result.report.check({a, b, x}, lambda.at(a, x) * lambda.at(b, la_inv(x)),
                            lambda.at(ab, x));
    }
  }
  return result;
}

/// The spatially constant reduction of a cocycle, when it exists. For an
/// associative loop the multiplicativity of the resulting function is
/// verified as well.
struct ModularFunctionResult {
  Side kind = Side::left;
  std::optional<std::vector<Rational>> delta;
  struct Witness {
    int a, x1, x2;
    Rational value1, value2;
  };
  std::optional<Witness> witness; // set iff some row varies spatially
  std::optional<VerificationReport> multiplicativity;

  bool spatially_constant() const { return delta.has_value(); }
};

inline ModularFunctionResult modular_function(const LoopTable& loop, const Measure& mu,
                                              Side kind) {
  const CocycleTable table = cocycle_table(loop, mu, kind);
  const int n = loop.order();
  ModularFunctionResult result;
  result.kind = kind;
  for (int a = 0; a < n; ++a)
    for (int x = 1; x < n; ++x)
      if (table.at(a, x) != table.at(a, 0)) {
        result.witness = {a, 0, x, table.at(a, 0), table.at(a, x)};
        return result;
      }
  std::vector<Rational> delta(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) delta[static_cast<std::size_t>(a)] = table.at(a, 0);
  if (loop.associativity_witness().associative()) {
    VerificationReport rep;
    rep.statement = "modular-multiplicativity";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        rep.check({a, b}, delta[static_cast<std::size_t>(loop.mul(a, b))],
                  delta[static_cast<std::size_t>(a)] * delta[static_cast<std::size_t>(b)]);
    result.multiplicativity = std::move(rep);
  }
  result.delta = std::move(delta);
  return result;
}

/// Unimodularity: both cocycles identically 1. Returns the first violating
/// entry otherwise (left table scanned before right).
struct UnimodularityResult {
  bool unimodular = false;
  struct Witness {
    Side kind;
    int a, x;
    Rational value;
  };
  std::optional<Witness> witness;
};

inline UnimodularityResult unimodularity_check(const LoopTable& loop, const Measure& mu) {
  if (mu.size() != loop.order())
    throw Error(Errc::size_mismatch, "measure size does not match loop order");
  for (Side kind : {Side::left, Side::right}) {
    const CocycleTable table = cocycle_table(loop, mu, kind);
    for (int a = 0; a < loop.order(); ++a)
      for (int x = 0; x < loop.order(); ++x)
        if (table.at(a, x) != 1)
          return UnimodularityResult{false,
                                     UnimodularityResult::Witness{kind, a, x, table.at(a, x)}};
  }
  return UnimodularityResult{true, std::nullopt};
}

/// Density of a translation word by iterating the chain rule: the factor
/// densities are cocycle rows evaluated at the preimage of x under the
/// composed prefix.
inline DensityVector chain_expansion(const LoopTable& loop, const TranslationWord& word,
                                     const Assignment& asg, const CocycleTable& lambda,
                                     const CocycleTable& rho) {
  const int n = loop.order();
  std::vector<Permutation> prefix_inv;
  std::vector<std::pair<Side, int>> factors;
  Permutation prefix = Permutation::identity(n);
  for (const TranslationFactor& f : word.factors) {
    prefix_inv.push_back(prefix.inverse());
    const int c = f.parameter.evaluate(loop, asg);
    factors.emplace_back(f.side, c);
    prefix = compose(prefix, loop.translation(f.side, c));
  }
  DensityVector out(static_cast<std::size_t>(n), Rational(1));
  for (int x = 0; x < n; ++x) {
    Rational acc(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const CocycleTable& table = factors[i].first == Side::left ? lambda : rho;
      acc *= table.at(factors[i].second, prefix_inv[i](x));
    }
    out[static_cast<std::size_t>(x)] = acc;
  }
  return out;
}

/// Compatibility constraint induced by an identity that holds on the loop:
/// for every assignment of the non-point variables, both sides compile to
/// translation words that (1) evaluate to the same permutation, (2) push mu
/// forward with identical densities, and (3) expand under the iterated chain
/// rule into cocycle products with identical values, which also match the
/// directly computed densities.
inline VerificationReport identity_compatibility(const LoopTable& loop, const Measure& mu,
                                                 const IdentityAst& id, char point) {
  if (mu.size() != loop.order())
    throw Error(Errc::size_mismatch, "measure size does not match loop order");
  const Verdict verdict = check_identity(loop, id);
  if (!verdict.holds) {
    std::string msg = "identity '" + id.to_string() + "' fails on the loop:";
    for (const auto& [var, val] : verdict.counterexample->assignment)
      msg += std::string(" ") + var + "=" + std::to_string(val);
    msg += " gives " + std::to_string(verdict.counterexample->lhs_value) + " != " +
           std::to_string(verdict.counterexample->rhs_value);
    throw Error(Errc::identity_fails, msg);
  }
  const TranslationWord lhs_word = compile_translation_word(id.lhs, point);
  const TranslationWord rhs_word = compile_translation_word(id.rhs, point);

  const CocycleTable lambda = cocycle_table(loop, mu, Side::left);
  const CocycleTable rho = cocycle_table(loop, mu, Side::right);
  const int n = loop.order();

  std::vector<char> others;
  for (char v : id.variables)
    if (v != point) others.push_back(v);

  VerificationReport rep;
  rep.statement = "identity-compatibility";
  std::vector<int> values(others.size(), 0);
  Assignment asg;
  for (;;) {
    for (std::size_t i = 0; i < others.size(); ++i) asg.bind(others[i], values[i]);

    const Permutation lhs_perm = evaluate_word(loop, lhs_word, asg);
    const Permutation rhs_perm = evaluate_word(loop, rhs_word, asg);
    std::vector<int> base(values);
    for (int x = 0; x < n; ++x) {
      std::vector<int> index(base);
      index.push_back(x);
      rep.check(index, Rational(lhs_perm(x)), Rational(rhs_perm(x)), "operator");
    }

    const DensityVector lhs_dens = rn_derivative(lhs_perm, mu);
    const DensityVector rhs_dens = rn_derivative(rhs_perm, mu);
    const DensityVector lhs_exp = chain_expansion(loop, lhs_word, asg, lambda, rho);
    const DensityVector rhs_exp = chain_expansion(loop, rhs_word, asg, lambda, rho);
    for (int x = 0; x < n; ++x) {
      std::vector<int> index(base);
      index.push_back(x);
      const auto xi = static_cast<std::size_t>(x);
      rep.check(index, lhs_dens[xi], rhs_dens[xi], "density");
      rep.check(index, lhs_exp[xi], rhs_exp[xi], "expansion");
      rep.check(index, lhs_exp[xi], lhs_dens[xi], "expansion-vs-density-lhs");
      rep.check(index, rhs_exp[xi], rhs_dens[xi], "expansion-vs-density-rhs");
    }

    std::size_t i = others.size();
    if (i == 0) break;
    for (;;) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return rep;
    }
  }
  return rep;
}

/// Orbits of the points under a set of translation generators. A measure is
/// invariant under every generator exactly when it is constant on each orbit,
/// so the orbit indicators form a basis of the invariant cone.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits; // each ascending, ordered by least element
  bool uniform_only() const { return orbits.size() == 1; }
};

inline OrbitPartition invariant_measure_basis(const LoopTable& loop,
                                              const std::vector<std::pair<Side, int>>& generators) {
  if (generators.empty()) throw Error(Errc::empty_generator_set, "generator set is empty");
  const int n = loop.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) parent[static_cast<std::size_t>(x)] = x;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const auto& [side, a] : generators) {
    const Permutation p = loop.translation(side, a);
    for (int x = 0; x < n; ++x) unite(x, p(x));
  }
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) buckets[static_cast<std::size_t>(find(x))].push_back(x);
  OrbitPartition partition;
  for (std::vector<int>& b : buckets)
    if (!b.empty()) partition.orbits.push_back(std::move(b));
  return partition;
}

inline OrbitPartition invariant_measure_basis(const LoopTable& loop) {
  std::vector<std::pair<Side, int>> gens;
  for (int a = 0; a < loop.order(); ++a) gens.emplace_back(Side::left, a);
  return invariant_measure_basis(loop, gens);
}

enum class TranslationSet { left, right, both };

/// Order of the permutation group generated by the chosen translations,
/// via breadth-first closure under composition.
inline long long mult_group_size(const LoopTable& loop, TranslationSet set, long long cap) {
  if (cap < 1) throw Error(Errc::invalid_config, "cap must be >= 1");
  std::vector<Permutation> gens;
  for (int a = 0; a < loop.order(); ++a) {
    if (set != TranslationSet::right) gens.push_back(loop.translation(Side::left, a));
    if (set != TranslationSet::left) gens.push_back(loop.translation(Side::right, a));
  }
  std::set<std::vector<int>> visited;
  std::deque<Permutation> frontier;
  const Permutation id = Permutation::identity(loop.order());
  visited.insert(id.images());
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : gens) {
      Permutation q = compose(g, p);
      if (visited.insert(q.images()).second) {
        if (static_cast<long long>(visited.size()) > cap)
          throw Error(Errc::cap_exceeded,
                      "multiplication group exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(q));
      }
    }
  }
  return static_cast<long long>(visited.size());
}

} // namespace loopmod
