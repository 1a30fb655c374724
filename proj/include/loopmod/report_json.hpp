#pragma once

#include <string>

#include <json.hpp>

#include "loopmod/identity.hpp"
#include "loopmod/loop_table.hpp"
#include "loopmod/measure.hpp"
#include "loopmod/verify.hpp"

namespace loopmod {

// Structured-text serialization. Keys keep insertion order and rationals
// render as "p/q" strings, so identical inputs yield identical bytes.
using Json = nlohmann::ordered_json;

inline Json to_json(const VerificationReport& rep) {
  Json failures = Json::array();
  for (const CaseFailure& f : rep.failures) {
    Json entry;
    entry["case"] = f.index;
    entry["lhs"] = format_rational(f.lhs);
    entry["rhs"] = format_rational(f.rhs);
    if (!f.detail.empty()) entry["detail"] = f.detail;
    failures.push_back(std::move(entry));
  }
  Json out;
  out["statement"] = rep.statement;
  out["cases"] = rep.total_cases;
  out["failure_count"] = rep.failure_count;
  out["failures"] = std::move(failures);
  out["pass"] = rep.pass();
  return out;
}

inline Json to_json(const LoopTable& loop) {
  Json out;
  out["order"] = loop.order();
  out["identity"] = loop.identity();
  out["table"] = loop.rows();
  return out;
}

inline Json to_json(const Measure& mu) {
  Json weights = Json::array();
  for (int x = 0; x < mu.size(); ++x) weights.push_back(format_rational(mu[x]));
  return weights;
}

inline Json to_json(const CocycleTable& table) {
  Json rows = Json::array();
  for (int a = 0; a < table.order; ++a) {
    Json row = Json::array();
    for (int x = 0; x < table.order; ++x) row.push_back(format_rational(table.at(a, x)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["kind"] = side_name(table.kind);
  out["entries"] = std::move(rows);
  return out;
}

inline Json to_json(const DensityVector& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(format_rational(v));
  return out;
}

inline Json to_json(const AssociativityWitness& witness) {
  Json out;
  out["associative"] = witness.associative();
  if (witness.violation) {
    const auto& v = *witness.violation;
    out["witness"] = {{"a", v.a},
                      {"b", v.b},
                      {"c", v.c},
                      {"left_product", v.left_product},
                      {"right_product", v.right_product}};
  }
  return out;
}

inline Json to_json(const Verdict& verdict) {
  Json out;
  out["holds"] = verdict.holds;
  if (verdict.counterexample) {
    Json asg;
    for (const auto& [var, val] : verdict.counterexample->assignment)
      asg[std::string(1, var)] = val;
    out["counterexample"] = {{"assignment", std::move(asg)},
                             {"lhs", verdict.counterexample->lhs_value},
                             {"rhs", verdict.counterexample->rhs_value}};
  }
  return out;
}

inline Json to_json(const TranslationWord& word) {
  Json factors = Json::array();
  for (const TranslationFactor& f : word.factors)
    factors.push_back({{"side", side_name(f.side)}, {"parameter", f.parameter.to_string()}});
  Json out;
  out["point"] = std::string(1, word.point);
  out["factors"] = std::move(factors);
  out["rendered"] = word.to_string();
  return out;
}

inline Json to_json(const ModularFunctionResult& result) {
  Json out;
  out["kind"] = side_name(result.kind);
  out["spatially_constant"] = result.spatially_constant();
  if (result.delta) {
    Json values = Json::array();
    for (const Rational& v : *result.delta) values.push_back(format_rational(v));
    out["delta"] = std::move(values);
  }
  if (result.witness) {
    const auto& w = *result.witness;
    out["witness"] = {{"a", w.a},
                      {"x1", w.x1},
                      {"x2", w.x2},
                      {"value1", format_rational(w.value1)},
                      {"value2", format_rational(w.value2)}};
  }
  if (result.multiplicativity) out["multiplicativity"] = to_json(*result.multiplicativity);
  return out;
}

inline Json to_json(const UnimodularityResult& result) {
  Json out;
  out["unimodular"] = result.unimodular;
  if (result.witness) {
    const auto& w = *result.witness;
    out["witness"] = {{"kind", side_name(w.kind)},
                      {"a", w.a},
                      {"x", w.x},
                      {"value", format_rational(w.value)}};
  }
  return out;
}

inline Json to_json(const OrbitPartition& partition) {
  Json out;
  out["orbits"] = partition.orbits;
  out["dimension"] = partition.orbits.size();
  out["uniform_only"] = partition.uniform_only();
  return out;
}

inline Json to_json(const RigidityResult& result) {
  Json pairs = Json::array();
  for (const auto& [a, b] : result.untwisted_pairs) pairs.push_back({a, b});
  Json out;
  out["untwisted_pairs"] = std::move(pairs);
  out["report"] = to_json(result.report);
  return out;
}

} // namespace loopmod
