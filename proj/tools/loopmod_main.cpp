// loopmod command-line tool: validation, enumeration, identity checking,
// cocycle computation, verifiers, and structural reports for finite loops.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loopmod/loopmod.hpp"

namespace {

using namespace loopmod;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;  // verification failed or counterexample found
constexpr int kExitUsage = 2; // usage or input error

// Loop input: a file path, '-' for standard input, or "builtin:<name>"
// for the named fixture loops.
LoopTable load_loop(const std::string& source) {
  if (source == "-") return read_loop(std::cin);
  if (source.rfind("builtin:", 0) == 0) return builtin_loop(source.substr(8));
  return read_loop_file(source);
}

// Measure input: a file path or the literal "uniform" (counting measure).
Measure load_measure(const std::string& source, int order) {
  if (source == "uniform") return Measure::uniform(order);
  return read_measure_file(source, order);
}

IdentityAst load_identity(const std::string& dsl, const std::string& builtin) {
  if (!dsl.empty() && !builtin.empty())
    throw Error(Errc::invalid_config, "give either --identity or --builtin, not both");
  if (!dsl.empty()) return parse_identity(dsl);
  if (!builtin.empty()) return builtin_identity(builtin);
  throw Error(Errc::invalid_config, "an identity is required (--identity or --builtin)");
}

char resolve_point(const IdentityAst& id, const std::string& point_opt) {
  if (!point_opt.empty()) {
    if (point_opt.size() != 1 || point_opt[0] < 'a' || point_opt[0] > 'z')
      throw Error(Errc::invalid_config, "--point must be a single letter a..z");
    return point_opt[0];
  }
  if (auto p = default_point_variable(id)) return *p;
  throw Error(Errc::nonlinear_point, "no variable is linear in both sides; give --point");
}

std::vector<std::pair<Side, int>> parse_generators(const std::string& spec,
                                                   const LoopTable& loop) {
  std::vector<std::pair<Side, int>> gens;
  auto add_all = [&](Side side) {
    for (int a = 0; a < loop.order(); ++a) gens.emplace_back(side, a);
  };
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "left") {
      add_all(Side::left);
    } else if (token == "right") {
      add_all(Side::right);
    } else if (token == "all") {
      add_all(Side::left);
      add_all(Side::right);
    } else if ((token[0] == 'L' || token[0] == 'l' || token[0] == 'R' || token[0] == 'r')) {
      const Side side = (token[0] == 'L' || token[0] == 'l') ? Side::left : Side::right;
      try {
        std::size_t used = 0;
        const int a = std::stoi(token.substr(1), &used);
        if (used != token.size() - 1) throw std::invalid_argument(token);
        gens.emplace_back(side, a);
      } catch (const std::exception&) {
        throw Error(Errc::invalid_config, "bad generator token '" + token + "'");
      }
    } else {
      throw Error(Errc::invalid_config, "bad generator token '" + token + "'");
    }
  }
  if (gens.empty()) throw Error(Errc::empty_generator_set, "generator spec selects nothing");
  return gens;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string format_witness(const AssociativityWitness& w) {
  if (w.associative()) return "yes";
  const auto& v = *w.violation;
  return "no (witness a=" + std::to_string(v.a) + " b=" + std::to_string(v.b) +
         " c=" + std::to_string(v.c) + ": (a*b)*c=" + std::to_string(v.left_product) +
         ", a*(b*c)=" + std::to_string(v.right_product) + ")";
}

void print_report_human(const VerificationReport& rep) {
  std::cout << rep.statement << ": " << (rep.pass() ? "PASS" : "FAIL") << " ("
            << rep.total_cases << " cases";
  if (!rep.pass()) std::cout << ", " << rep.failure_count << " failures";
  std::cout << ")\n";
  for (const CaseFailure& f : rep.failures) {
    std::cout << "  case";
    for (int i : f.index) std::cout << ' ' << i;
    if (!f.detail.empty()) std::cout << " [" << f.detail << "]";
    std::cout << ": " << format_rational(f.lhs) << " != " << format_rational(f.rhs) << '\n';
  }
}

void print_cocycle_human(const CocycleTable& table) {
  std::cout << side_name(table.kind) << " cocycle:\n";
  for (int a = 0; a < table.order; ++a) {
    std::cout << "  a=" << a << " |";
    for (int x = 0; x < table.order; ++x) std::cout << ' ' << format_rational(table.at(a, x));
    std::cout << '\n';
  }
}

void print_counterexample_human(const Verdict& verdict) {
  const auto& ce = *verdict.counterexample;
  std::cout << "counterexample:";
  for (const auto& [var, val] : ce.assignment) std::cout << ' ' << var << '=' << val;
  std::cout << " -> lhs=" << ce.lhs_value << " rhs=" << ce.rhs_value << '\n';
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& loop_src, bool json) {
  const LoopTable loop = load_loop(loop_src);
  const AssociativityWitness witness = loop.associativity_witness();
  if (json) {
    Json doc;
    doc["order"] = loop.order();
    doc["identity"] = loop.identity();
    doc["valid"] = true;
    doc["associativity"] = to_json(witness);
    emit(doc);
  } else {
    std::cout << "order: " << loop.order() << '\n'
              << "identity: " << loop.identity() << '\n'
              << "latin: ok\n"
              << "associative: " << format_witness(witness) << '\n';
  }
  return kExitPass;
}

// --------------------------------------------------------------- enumerate

int cmd_enumerate(int order, bool iso, bool count_only, std::optional<long long> limit,
                  const std::vector<int>& prefix, bool json) {
  EnumerationConfig cfg;
  cfg.order = order;
  cfg.mode = iso ? EnumerationConfig::Mode::up_to_isomorphism
                 : EnumerationConfig::Mode::normalized;
  cfg.limit = limit;
  cfg.row1_prefix = prefix;

  if (json) {
    Json loops = Json::array();
    const long long count = enumerate_loops(cfg, [&](const LoopTable& loop) {
      if (!count_only) loops.push_back(loop.rows());
    });
    Json doc;
    doc["order"] = order;
    doc["mode"] = iso ? "up_to_isomorphism" : "normalized";
    doc["count"] = count;
    if (!count_only) doc["loops"] = std::move(loops);
    emit(doc);
    return kExitPass;
  }
  bool first = true;
  const long long count = enumerate_loops(cfg, [&](const LoopTable& loop) {
    if (count_only) return;
    if (!first) std::cout << '\n';
    first = false;
    write_loop(std::cout, loop);
  });
  if (count_only) std::cout << count << '\n';
  return kExitPass;
}

// ------------------------------------------------------------------- check

int cmd_check(const std::string& loop_src, const std::string& dsl, const std::string& builtin,
              bool json) {
  const LoopTable loop = load_loop(loop_src);
  const IdentityAst id = load_identity(dsl, builtin);
  const Verdict verdict = check_identity(loop, id);
  long long assignments = 1;
  for (std::size_t i = 0; i < id.variables.size(); ++i) assignments *= loop.order();
  if (json) {
    Json doc;
    doc["identity"] = id.to_string();
    Json vars = Json::array();
    for (char v : id.variables) vars.push_back(std::string(1, v));
    doc["variables"] = std::move(vars);
    doc["assignments"] = assignments;
    doc.update(to_json(verdict));
    emit(doc);
  } else {
    std::cout << "identity: " << id.to_string() << '\n';
    std::cout << "holds: " << (verdict.holds ? "yes" : "no") << " (" << assignments
              << " assignments)\n";
    if (!verdict.holds) print_counterexample_human(verdict);
  }
  return verdict.holds ? kExitPass : kExitFail;
}

// -------------------------------------------------------- compile-identity

int cmd_compile_identity(const std::string& dsl, const std::string& builtin,
                         const std::string& point_opt, bool json) {
  const IdentityAst id = load_identity(dsl, builtin);
  const char point = resolve_point(id, point_opt);
  const TranslationWord lhs = compile_translation_word(id.lhs, point);
  const TranslationWord rhs = compile_translation_word(id.rhs, point);
  if (json) {
    Json doc;
    doc["identity"] = id.to_string();
    doc["point"] = std::string(1, point);
    doc["lhs_word"] = to_json(lhs);
    doc["rhs_word"] = to_json(rhs);
    emit(doc);
  } else {
    std::cout << "identity: " << id.to_string() << '\n'
              << "point: " << point << '\n'
              << "lhs word: " << lhs.to_string() << '\n'
              << "rhs word: " << rhs.to_string() << '\n';
  }
  return kExitPass;
}

// ----------------------------------------------------------------- cocycle

int cmd_cocycle(const std::string& loop_src, const std::string& measure_src,
                const std::string& side, bool json) {
  const LoopTable loop = load_loop(loop_src);
  const Measure mu = load_measure(measure_src, loop.order());
  const bool want_left = side != "right";
  const bool want_right = side != "left";
  const UnimodularityResult unimodular = unimodularity_check(loop, mu);

  Json doc;
  doc["order"] = loop.order();
  doc["measure"] = to_json(mu);
  if (want_left) {
    const CocycleTable table = cocycle_table(loop, mu, Side::left);
    const ModularFunctionResult modular = modular_function(loop, mu, Side::left);
    if (json) {
      doc["left"] = to_json(table);
      doc["modular_left"] = to_json(modular);
    } else {
      print_cocycle_human(table);
      std::cout << "modular function (left): "
                << (modular.spatially_constant() ? "spatially constant" : "spatially varying");
      if (modular.delta) {
        std::cout << ", delta =";
        for (const Rational& v : *modular.delta) std::cout << ' ' << format_rational(v);
      } else {
        const auto& w = *modular.witness;
        std::cout << " (witness a=" << w.a << ": value(" << w.x1
                  << ")=" << format_rational(w.value1) << " != value(" << w.x2
                  << ")=" << format_rational(w.value2) << ")";
      }
      std::cout << '\n';
    }
  }
  if (want_right) {
    const CocycleTable table = cocycle_table(loop, mu, Side::right);
    const ModularFunctionResult modular = modular_function(loop, mu, Side::right);
    if (json) {
      doc["right"] = to_json(table);
      doc["modular_right"] = to_json(modular);
    } else {
      print_cocycle_human(table);
      std::cout << "modular function (right): "
                << (modular.spatially_constant() ? "spatially constant" : "spatially varying");
      if (modular.delta) {
        std::cout << ", delta =";
        for (const Rational& v : *modular.delta) std::cout << ' ' << format_rational(v);
      } else {
        const auto& w = *modular.witness;
        std::cout << " (witness a=" << w.a << ": value(" << w.x1
                  << ")=" << format_rational(w.value1) << " != value(" << w.x2
                  << ")=" << format_rational(w.value2) << ")";
      }
      std::cout << '\n';
    }
  }
  if (json) {
    doc["unimodularity"] = to_json(unimodular);
    emit(doc);
  } else {
    std::cout << "unimodular: " << (unimodular.unimodular ? "yes" : "no");
    if (unimodular.witness) {
      const auto& w = *unimodular.witness;
      std::cout << " (witness " << side_name(w.kind) << " a=" << w.a << " x=" << w.x
                << " value=" << format_rational(w.value) << ")";
    }
    std::cout << '\n';
  }
  return kExitPass;
}

// --------------------------------------------------------------- deviation

int cmd_deviation(const std::string& loop_src, bool json) {
  const LoopTable loop = load_loop(loop_src);
  const int n = loop.order();
  std::vector<std::pair<int, int>> identity_pairs;
  Json grid = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) {
      const Permutation phi = loop.deviation(a, b);
      if (phi.is_identity()) identity_pairs.emplace_back(a, b);
      if (json) row.push_back(phi.images());
    }
    if (json) grid.push_back(std::move(row));
  }
  if (json) {
    Json pairs = Json::array();
    for (const auto& [a, b] : identity_pairs) pairs.push_back({a, b});
    Json doc;
    doc["order"] = n;
    doc["pairs"] = n * n;
    doc["identity_pairs"] = std::move(pairs);
    doc["deviation"] = std::move(grid);
    emit(doc);
  } else {
    std::cout << "order: " << n << '\n'
              << "pairs: " << n * n << '\n'
              << "identity-deviation pairs (P): " << identity_pairs.size() << '\n';
    std::cout << "P:";
    for (const auto& [a, b] : identity_pairs) std::cout << " (" << a << "," << b << ")";
    std::cout << '\n';
  }
  return kExitPass;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& loop_src, const std::string& measure_src, bool all,
               bool chain_rule, bool cocycle_rel, bool rigidity, bool compat,
               const std::string& dsl, const std::string& builtin, const std::string& point_opt,
               bool json) {
  const LoopTable loop = load_loop(loop_src);
  const Measure mu = load_measure(measure_src, loop.order());
  if (!all && !chain_rule && !cocycle_rel && !rigidity && !compat) all = true;
  const bool have_identity = !dsl.empty() || !builtin.empty();
  if (compat && !have_identity)
    throw Error(Errc::invalid_config, "--compat needs --identity or --builtin");

  std::vector<VerificationReport> reports;
  Json extra;
  if (all || chain_rule) reports.push_back(verify_chain_rule_family(loop, mu));
  if (all || cocycle_rel) reports.push_back(verify_cocycle_relation(loop, mu));
  if (all || rigidity) {
    RigidityResult result = rigidity_report(loop, mu);
    Json pairs = Json::array();
    for (const auto& [a, b] : result.untwisted_pairs) pairs.push_back({a, b});
    extra["untwisted_pairs"] = std::move(pairs);
    reports.push_back(std::move(result.report));
  }
  if (compat || (all && have_identity)) {
    const IdentityAst id = load_identity(dsl, builtin);
    const char point = resolve_point(id, point_opt);
    reports.push_back(identity_compatibility(loop, mu, id, point));
  }

  bool pass = true;
  for (const VerificationReport& rep : reports) pass = pass && rep.pass();
  if (json) {
    Json docs = Json::array();
    for (const VerificationReport& rep : reports) docs.push_back(to_json(rep));
    Json doc;
    doc["order"] = loop.order();
    doc["measure"] = to_json(mu);
    doc["verifiers"] = std::move(docs);
    if (!extra.is_null()) doc.update(extra);
    doc["pass"] = pass;
    emit(doc);
  } else {
    for (const VerificationReport& rep : reports) print_report_human(rep);
    std::cout << (pass ? "all verifications passed" : "SOME VERIFICATIONS FAILED") << '\n';
  }
  return pass ? kExitPass : kExitFail;
}

// ------------------------------------------------------ invariant-measures

int cmd_invariant_measures(const std::string& loop_src, const std::string& generators,
                           bool json) {
  const LoopTable loop = load_loop(loop_src);
  const OrbitPartition partition =
      invariant_measure_basis(loop, parse_generators(generators, loop));
  if (json) {
    Json doc;
    doc["order"] = loop.order();
    doc["generators"] = generators;
    doc.update(to_json(partition));
    emit(doc);
  } else {
    std::cout << "generators: " << generators << '\n'
              << "orbits: " << partition.orbits.size() << '\n';
    for (std::size_t i = 0; i < partition.orbits.size(); ++i) {
      std::cout << "  orbit " << i << ":";
      for (int x : partition.orbits[i]) std::cout << ' ' << x;
      std::cout << '\n';
    }
    std::cout << "basis: one indicator vector per orbit"
              << (partition.uniform_only() ? " (uniform-only)" : "") << '\n';
  }
  return kExitPass;
}

// ------------------------------------------------------------------ report

int cmd_report(const std::string& loop_src, const std::string& measure_src,
               const std::string& dsl, const std::string& builtin, const std::string& point_opt,
               bool json) {
  const LoopTable loop = load_loop(loop_src);
  const Measure mu = load_measure(measure_src, loop.order());
  const bool have_identity = !dsl.empty() || !builtin.empty();

  const AssociativityWitness witness = loop.associativity_witness();
  const CocycleTable left = cocycle_table(loop, mu, Side::left);
  const CocycleTable right = cocycle_table(loop, mu, Side::right);
  const ModularFunctionResult modular_left = modular_function(loop, mu, Side::left);
  const ModularFunctionResult modular_right = modular_function(loop, mu, Side::right);
  const UnimodularityResult unimodular = unimodularity_check(loop, mu);
  RigidityResult rigidity = rigidity_report(loop, mu);
  const VerificationReport chain = verify_chain_rule_family(loop, mu);
  const VerificationReport cocycle_rel = verify_cocycle_relation(loop, mu);
  const OrbitPartition orbits = invariant_measure_basis(loop);

  std::optional<VerificationReport> compat;
  std::optional<std::string> compat_identity;
  std::optional<char> compat_point;
  if (have_identity) {
    const IdentityAst id = load_identity(dsl, builtin);
    const char point = resolve_point(id, point_opt);
    compat = identity_compatibility(loop, mu, id, point);
    compat_identity = id.to_string();
    compat_point = point;
  }

  bool pass = chain.pass() && cocycle_rel.pass() && rigidity.report.pass();
  if (modular_left.multiplicativity) pass = pass && modular_left.multiplicativity->pass();
  if (modular_right.multiplicativity) pass = pass && modular_right.multiplicativity->pass();
  if (compat) pass = pass && compat->pass();

  if (json) {
    Json doc;
    doc["loop"] = to_json(loop);
    doc["associativity"] = to_json(witness);
    doc["measure"] = to_json(mu);
    doc["cocycle_left"] = to_json(left);
    doc["cocycle_right"] = to_json(right);
    doc["modular_left"] = to_json(modular_left);
    doc["modular_right"] = to_json(modular_right);
    doc["unimodularity"] = to_json(unimodular);
    doc["rigidity"] = to_json(rigidity);
    doc["chain_rule"] = to_json(chain);
    doc["cocycle_relation"] = to_json(cocycle_rel);
    doc["invariant_measures"] = to_json(orbits);
    if (compat) {
      doc["compatibility"] = to_json(*compat);
      doc["compatibility"]["identity"] = *compat_identity;
      doc["compatibility"]["point"] = std::string(1, *compat_point);
    }
    doc["pass"] = pass;
    emit(doc);
  } else {
    std::cout << "loop: order " << loop.order() << ", identity " << loop.identity() << '\n';
    std::cout << "associative: " << format_witness(witness) << '\n';
    print_cocycle_human(left);
    print_cocycle_human(right);
    std::cout << "unimodular: " << (unimodular.unimodular ? "yes" : "no") << '\n';
    std::cout << "untwisted pairs: " << rigidity.untwisted_pairs.size() << " of "
              << loop.order() * loop.order() << '\n';
    print_report_human(chain);
    print_report_human(cocycle_rel);
    print_report_human(rigidity.report);
    if (modular_left.multiplicativity) print_report_human(*modular_left.multiplicativity);
    if (modular_right.multiplicativity) print_report_human(*modular_right.multiplicativity);
    if (compat) {
      std::cout << "compatibility identity: " << *compat_identity << " (point "
                << *compat_point << ")\n";
      print_report_human(*compat);
    }
    std::cout << "orbits under left translations: " << orbits.orbits.size() << '\n';
    std::cout << (pass ? "all verifications passed" : "SOME VERIFICATIONS FAILED") << '\n';
  }
  return pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Haar-type measure data and identity verifiers for finite loops"};
  app.require_subcommand(1);

  bool json = false;

  std::string loop_src, measure_src = "uniform";
  std::string dsl, builtin, point_opt;

  auto* validate = app.add_subcommand("validate", "validate a loop table");
  validate->add_option("loop", loop_src, "loop file, '-' for stdin, or builtin:<name>")
      ->required();
  validate->add_flag("--json", json, "structured output");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate loops of one order");
  int order = 1;
  bool iso = false, count_only = false;
  long long limit_val = 0;
  std::vector<int> prefix;
  enumerate->add_option("--order", order, "loop order")->required();
  enumerate->add_flag("--iso", iso, "one representative per isomorphism class");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  auto* limit_opt = enumerate->add_option("--limit", limit_val, "cap on emitted loops");
  enumerate->add_option("--prefix", prefix, "fixed values for row 1, columns 1..");
  enumerate->add_flag("--json", json, "structured output");

  auto* check = app.add_subcommand("check", "check an identity on a loop");
  check->add_option("loop", loop_src, "loop file, '-' for stdin, or builtin:<name>")
      ->required();
  check->add_option("--identity", dsl, "identity in the DSL, e.g. \"(x*y)*z = x*(y*z)\"");
  check->add_option("--builtin", builtin, "builtin identity name");
  check->add_flag("--json", json, "structured output");

  auto* compile = app.add_subcommand("compile-identity", "compile both sides into words");
  compile->add_option("--identity", dsl, "identity in the DSL");
  compile->add_option("--builtin", builtin, "builtin identity name");
  compile->add_option("--point", point_opt, "point variable (default: last linear)");
  compile->add_flag("--json", json, "structured output");

  auto* cocycle = app.add_subcommand("cocycle", "cocycle tables, modular function, unimodularity");
  std::string side = "both";
  cocycle->add_option("loop", loop_src, "loop file, '-' for stdin, or builtin:<name>")
      ->required();
  cocycle->add_option("--measure", measure_src, "measure file or 'uniform'")->required();
  cocycle->add_option("--side", side, "left, right, or both")
      ->check(CLI::IsMember({"left", "right", "both"}));
  cocycle->add_flag("--json", json, "structured output");

  auto* deviation = app.add_subcommand("deviation", "deviation maps and untwisted pair set");
  deviation->add_option("loop", loop_src, "loop file, '-' for stdin, or builtin:<name>")
      ->required();
  deviation->add_flag("--json", json, "structured output");

  auto* verify = app.add_subcommand("verify", "run measure verifiers");
  bool all = false, chain_rule = false, cocycle_rel = false, rigidity = false, compat = false;
  verify->add_option("loop", loop_src, "loop file, '-' for stdin, or builtin:<name>")
      ->required();
  verify->add_option("--measure", measure_src, "measure file or 'uniform'")->required();
  verify->add_flag("--all", all, "run every verifier (default)");
  verify->add_flag("--chain-rule", chain_rule, "chain rule over translations and deviations");
  verify->add_flag("--cocycle-relation", cocycle_rel, "deviation-corrected cocycle relation");
  verify->add_flag("--rigidity", rigidity, "untwisted relation on identity-deviation pairs");
  verify->add_flag("--compat", compat, "identity compatibility (needs an identity)");
  verify->add_option("--identity", dsl, "identity in the DSL");
  verify->add_option("--builtin", builtin, "builtin identity name");
  verify->add_option("--point", point_opt, "point variable (default: last linear)");
  verify->add_flag("--json", json, "structured output");

  auto* invariant = app.add_subcommand("invariant-measures", "orbit partition and basis");
  std::string generators = "left";
  invariant->add_option("loop", loop_src, "loop file, '-' for stdin, or builtin:<name>")
      ->required();
  invariant->add_option("--generators", generators,
                        "comma list of left|right|all|L<k>|R<k> (default left)");
  invariant->add_flag("--json", json, "structured output");

  auto* report = app.add_subcommand("report", "full structural report");
  report->add_option("loop", loop_src, "loop file, '-' for stdin, or builtin:<name>")
      ->required();
  report->add_option("--measure", measure_src, "measure file or 'uniform'")->required();
  report->add_option("--identity", dsl, "identity for the compatibility section");
  report->add_option("--builtin", builtin, "builtin identity name");
  report->add_option("--point", point_opt, "point variable (default: last linear)");
  report->add_flag("--json", json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(loop_src, json);
    if (app.got_subcommand(enumerate)) {
      std::optional<long long> limit;
      if (limit_opt->count() > 0) limit = limit_val;
      return cmd_enumerate(order, iso, count_only, limit, prefix, json);
    }
    if (app.got_subcommand(check)) return cmd_check(loop_src, dsl, builtin, json);
    if (app.got_subcommand(compile)) return cmd_compile_identity(dsl, builtin, point_opt, json);
    if (app.got_subcommand(cocycle)) return cmd_cocycle(loop_src, measure_src, side, json);
    if (app.got_subcommand(deviation)) return cmd_deviation(loop_src, json);
    if (app.got_subcommand(verify))
      return cmd_verify(loop_src, measure_src, all, chain_rule, cocycle_rel, rigidity, compat,
                        dsl, builtin, point_opt, json);
    if (app.got_subcommand(invariant)) return cmd_invariant_measures(loop_src, generators, json);
    if (app.got_subcommand(report))
      return cmd_report(loop_src, measure_src, dsl, builtin, point_opt, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::identity_fails ? kExitFail : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
