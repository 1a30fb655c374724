#include <catch2/catch_amalgamated.hpp>

#include "loopmod/loopmod.hpp"
#include "test_support.hpp"

using namespace loopmod;
using testsupport::all_loops;

TEST_CASE("parser handles the fixture identities") {
  const IdentityAst kunen = parse_identity("((x*y)*z)*y = x*(y*(z*y))");
  CHECK(kunen.variables == std::vector<char>{'x', 'y', 'z'});
  CHECK(kunen.to_string() == "(((x*y)*z)*y) = (x*(y*(z*y)))");

  const IdentityAst trivial = parse_identity("x = x");
  CHECK(trivial.variables == std::vector<char>{'x'});
  CHECK(trivial.lhs == trivial.rhs);

  const IdentityAst assoc = parse_identity("(x*y)*z = x*(y*z)");
  CHECK(assoc.variables == std::vector<char>{'x', 'y', 'z'});
  CHECK(assoc == builtin_identity("associativity"));

  // whitespace is ignored
  CHECK(parse_identity("  (x * y) * z=x*( y * z )  ") == assoc);
}

TEST_CASE("parser reports errors with byte offsets") {
  auto code_of = [](const std::string& text) {
    try {
      parse_identity(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::unsupported;
  };
  CHECK(code_of("= x") == Errc::empty_side);
  CHECK(code_of("x =") == Errc::empty_side);
  CHECK(code_of("x") == Errc::syntax_error);
  CHECK(code_of("x*y*z = x") == Errc::syntax_error); // grouping must be explicit
  CHECK(code_of("(x) = x") == Errc::syntax_error);   // parens wrap products only
  CHECK(code_of("x = y = z") == Errc::syntax_error);
  CHECK(code_of("X = x") == Errc::syntax_error);
  CHECK(code_of("x = (y*z") == Errc::syntax_error);

  try {
    parse_identity("x ? y");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::syntax_error);
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("round trip through the printer") {
  for (const std::string& name : builtin_identity_names()) {
    const IdentityAst ast = builtin_identity(name);
    CHECK(parse_identity(ast.to_string()) == ast);
  }
  const IdentityAst custom = parse_identity("((a*b)*(c*d))*a = a*(b*(c*(d*a)))");
  CHECK(parse_identity(custom.to_string()) == custom);
}

TEST_CASE("builtin identities") {
  CHECK(builtin_identity("kunen") == parse_identity("((x*y)*z)*y = x*(y*(z*y))"));
  CHECK(builtin_identity("moufang-right") == builtin_identity("kunen"));
  CHECK(builtin_identity("associativity") == parse_identity("(x*y)*z = x*(y*z)"));
  CHECK(builtin_identity("flexible") == parse_identity("x*(y*x) = (x*y)*x"));
  CHECK_THROWS_MATCHES(builtin_identity("nope"), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::unknown_builtin;
                       }));
}

TEST_CASE("check_identity on the fixtures") {
  const LoopTable c4 = builtin_loop("cyclic:4");
  CHECK(check_identity(c4, builtin_identity("associativity")).holds);

  const LoopTable q5 = builtin_loop("q5_nonassoc");
  const Verdict v = check_identity(q5, builtin_identity("associativity"));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.counterexample.has_value());
  const auto& ce = *v.counterexample;
  CHECK(ce.assignment == std::vector<std::pair<char, int>>{{'x', 1}, {'y', 1}, {'z', 2}});
  CHECK(ce.lhs_value == 2);
  CHECK(ce.rhs_value == 4);

  // counterexample matches the associativity witness
  const AssociativityWitness w = q5.associativity_witness();
  CHECK(w.violation->a == ce.assignment[0].second);
  CHECK(w.violation->b == ce.assignment[1].second);
  CHECK(w.violation->c == ce.assignment[2].second);

  CHECK(check_identity(builtin_loop("octonion16"), builtin_identity("kunen")).holds);
}

TEST_CASE("groups satisfy every builtin identity") {
  for (int n = 2; n <= 8; ++n) {
    const LoopTable group = builtin_loop("cyclic:" + std::to_string(n));
    for (const std::string& name : builtin_identity_names())
      CHECK(check_identity(group, builtin_identity(name)).holds);
  }
}

TEST_CASE("octonion16 is Moufang") {
  const LoopTable oct = builtin_loop("octonion16");
  for (const std::string& name : {"kunen", "moufang-left", "left-bol", "right-bol", "flexible"})
    CHECK(check_identity(oct, builtin_identity(name)).holds);
  CHECK_FALSE(check_identity(oct, builtin_identity("associativity")).holds);
}

TEST_CASE("kunen sides compile to the expected words") {
  const IdentityAst kunen = builtin_identity("kunen");
  CHECK(default_point_variable(kunen) == 'z');

  const TranslationWord lhs = compile_translation_word(kunen.lhs, 'z');
  REQUIRE(lhs.factors.size() == 2);
  CHECK(lhs.factors[0].side == Side::right);
  CHECK(lhs.factors[0].parameter.to_string() == "y");
  CHECK(lhs.factors[1].side == Side::left);
  CHECK(lhs.factors[1].parameter.to_string() == "(x*y)");
  CHECK(lhs.to_string() == "R[y] * L[(x*y)]");

  const TranslationWord rhs = compile_translation_word(kunen.rhs, 'z');
  REQUIRE(rhs.factors.size() == 3);
  CHECK(rhs.to_string() == "L[x] * L[y] * R[y]");

  const TranslationWord bare = compile_translation_word(Term::var('z'), 'z');
  CHECK(bare.factors.empty());
  CHECK(bare.to_string() == "id");

  CHECK_THROWS_MATCHES(compile_translation_word(kunen.lhs, 'y'), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::nonlinear_point;
                       }));
  CHECK_THROWS_MATCHES(compile_translation_word(kunen.lhs, 'w'), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::nonlinear_point;
                       }));
}

TEST_CASE("evaluate_word fixtures") {
  const LoopTable q5 = builtin_loop("q5_nonassoc");
  const IdentityAst kunen = builtin_identity("kunen");

  Assignment empty;
  CHECK(evaluate_word(q5, TranslationWord{{}, 'z'}, empty).is_identity());

  Assignment asg;
  asg.bind('x', 1);
  asg.bind('y', 1);
  const TranslationWord lhs = compile_translation_word(kunen.lhs, 'z');
  CHECK(evaluate_word(q5, lhs, asg).images() == std::vector<int>{1, 0, 3, 4, 2});

  Assignment partial;
  partial.bind('x', 1);
  CHECK_THROWS_MATCHES(evaluate_word(q5, lhs, partial), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::unbound_variable;
                       }));
}

TEST_CASE("compiled words reproduce direct evaluation on every small loop") {
  for (int order = 1; order <= 5; ++order) {
    for (const LoopTable& loop : all_loops(order)) {
      const int n = loop.order();
      for (const std::string& name : builtin_identity_names()) {
        const IdentityAst id = builtin_identity(name);
        for (const Term* side : {&id.lhs, &id.rhs}) {
          for (char point : id.variables) {
            if (side->count_occurrences(point) != 1) continue;
            const TranslationWord word = compile_translation_word(*side, point);
            std::vector<char> others;
            for (char v : id.variables)
              if (v != point && side->count_occurrences(v) > 0) others.push_back(v);
            std::vector<int> values(others.size(), 0);
            bool ok = true;
            for (;;) {
              Assignment asg;
              for (std::size_t i = 0; i < others.size(); ++i) asg.bind(others[i], values[i]);
              const Permutation perm = evaluate_word(loop, word, asg);
              for (int z = 0; z < n; ++z) {
                Assignment full = asg;
                full.bind(point, z);
                if (perm(z) != side->evaluate(loop, full)) ok = false;
              }
              std::size_t i = others.size();
              if (i == 0) break;
              bool done = false;
              for (;;) {
                --i;
                if (++values[i] < n) break;
                values[i] = 0;
                if (i == 0) {
                  done = true;
                  break;
                }
              }
              if (done) break;
            }
            if (!ok) {
              INFO("identity " << name << " side " << side->to_string() << " point " << point
                               << " order " << order);
              CHECK(ok);
              return;
            }
          }
        }
      }
    }
  }
  SUCCEED();
}

TEST_CASE("identity verdict matches compiled word equality") {
  // when both sides are linear in the point, the identity holds exactly when
  // the two compiled words agree as permutations for every assignment
  const IdentityAst kunen = builtin_identity("kunen");
  for (const std::string& name : {"q5_nonassoc", "cyclic:4", "octonion16"}) {
    const LoopTable loop = builtin_loop(name);
    const int n = loop.order();
    const TranslationWord lhs = compile_translation_word(kunen.lhs, 'z');
    const TranslationWord rhs = compile_translation_word(kunen.rhs, 'z');
    bool words_equal = true;
    for (int x = 0; x < n && words_equal; ++x)
      for (int y = 0; y < n && words_equal; ++y) {
        Assignment asg;
        asg.bind('x', x);
        asg.bind('y', y);
        if (!(evaluate_word(loop, lhs, asg) == evaluate_word(loop, rhs, asg)))
          words_equal = false;
      }
    CHECK(words_equal == check_identity(loop, kunen).holds);
  }
}

TEST_CASE("default point variable picks the last linear variable") {
  CHECK(default_point_variable(builtin_identity("associativity")) == 'z');
  CHECK(default_point_variable(builtin_identity("kunen")) == 'z');
  CHECK(default_point_variable(builtin_identity("flexible")) == 'y');
  CHECK(default_point_variable(builtin_identity("moufang-left")) == 'z');
  // no variable linear on both sides
  const IdentityAst squares = parse_identity("x*x = x*x");
  CHECK_FALSE(default_point_variable(squares).has_value());
}
