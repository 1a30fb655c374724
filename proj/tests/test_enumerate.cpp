#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "loopmod/loopmod.hpp"
#include "test_support.hpp"

using namespace loopmod;
using testsupport::all_loops;
using testsupport::slow_reduced_latin_count;

TEST_CASE("normalized counts match the independent slow oracle at small orders") {
  for (int n = 1; n <= 4; ++n)
    CHECK(count_loops(n, EnumerationConfig::Mode::normalized) == slow_reduced_latin_count(n));
}

TEST_CASE("normalized and isomorphism counts at orders 1..5") {
  const long long expected_normalized[] = {1, 1, 1, 4, 56};
  const long long expected_iso[] = {1, 1, 1, 2, 6};
  for (int n = 1; n <= 5; ++n) {
    CHECK(count_loops(n, EnumerationConfig::Mode::normalized) == expected_normalized[n - 1]);
    CHECK(count_loops(n, EnumerationConfig::Mode::up_to_isomorphism) == expected_iso[n - 1]);
  }
}

TEST_CASE("every emitted table validates and is normalized") {
  for (int n = 1; n <= 5; ++n)
    for (const LoopTable& loop : all_loops(n)) {
      const LoopTable revalidated = LoopTable::validate(loop.rows());
      CHECK(revalidated == loop);
      CHECK(loop.identity() == 0);
      for (int i = 0; i < n; ++i) {
        CHECK(loop.mul(0, i) == i);
        CHECK(loop.mul(i, 0) == i);
      }
    }
}

TEST_CASE("normalized emission is lexicographic and deterministic") {
  std::vector<std::vector<int>> cells;
  EnumerationConfig cfg;
  cfg.order = 5;
  enumerate_loops(cfg, [&](const LoopTable& loop) { cells.push_back(loop.cells()); });
  CHECK(std::is_sorted(cells.begin(), cells.end()));
  CHECK(std::adjacent_find(cells.begin(), cells.end()) == cells.end());

  std::vector<std::vector<int>> again;
  enumerate_loops(cfg, [&](const LoopTable& loop) { again.push_back(loop.cells()); });
  CHECK(cells == again);
}

TEST_CASE("isomorphism mode emits canonical representatives exactly once") {
  EnumerationConfig cfg;
  cfg.order = 5;
  cfg.mode = EnumerationConfig::Mode::up_to_isomorphism;
  std::vector<LoopTable> reps;
  enumerate_loops(cfg, [&](const LoopTable& loop) { reps.push_back(loop); });
  REQUIRE(reps.size() == 6);

  std::set<std::vector<int>> keys;
  for (const LoopTable& rep : reps) {
    CHECK(rep.canonical_form() == rep);
    CHECK(keys.insert(rep.cells()).second);
  }
  CHECK(std::is_sorted(reps.begin(), reps.end(), [](const LoopTable& a, const LoopTable& b) {
    return a.cells() < b.cells();
  }));

  // the canonical forms of all normalized loops are exactly the emitted set
  std::map<std::vector<int>, int> canonical_multiset;
  for (const LoopTable& loop : all_loops(5)) ++canonical_multiset[loop.canonical_form().cells()];
  std::set<std::vector<int>> canonical_set;
  for (const auto& [key, count] : canonical_multiset) {
    CHECK(count >= 1);
    canonical_set.insert(key);
  }
  CHECK(canonical_set == keys);
}

TEST_CASE("limit caps emission") {
  EnumerationConfig cfg;
  cfg.order = 5;
  cfg.limit = 10;
  int seen = 0;
  CHECK(enumerate_loops(cfg, [&](const LoopTable&) { ++seen; }) == 10);
  CHECK(seen == 10);

  cfg.mode = EnumerationConfig::Mode::up_to_isomorphism;
  cfg.limit = 3;
  CHECK(enumerate_loops(cfg, [](const LoopTable&) {}) == 3);

  cfg.limit = 0;
  CHECK_THROWS_MATCHES(enumerate_loops(cfg, [](const LoopTable&) {}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::invalid_config;
                       }));
}

TEST_CASE("partitioned runs add up to the full count") {
  // cell (1,1) can hold anything except the value 1
  long long total = 0;
  for (int v : {0, 2, 3, 4}) {
    EnumerationConfig cfg;
    cfg.order = 5;
    cfg.row1_prefix = {v};
    total += enumerate_loops(cfg, [](const LoopTable&) {});
  }
  CHECK(total == 56);

  // isomorphism mode: canonical key sets over the partitions union to the
  // full set of class representatives
  std::set<std::vector<int>> keys;
  for (int v : {0, 2, 3, 4}) {
    EnumerationConfig cfg;
    cfg.order = 5;
    cfg.mode = EnumerationConfig::Mode::up_to_isomorphism;
    cfg.row1_prefix = {v};
    enumerate_loops(cfg, [&](const LoopTable& loop) { keys.insert(loop.cells()); });
  }
  CHECK(keys.size() == 6);
}

TEST_CASE("invalid prefixes are rejected") {
  EnumerationConfig cfg;
  cfg.order = 5;
  cfg.row1_prefix = {1}; // row 1 already contains 1 in column 0
  CHECK_THROWS_MATCHES(enumerate_loops(cfg, [](const LoopTable&) {}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::invalid_prefix;
                       }));
  cfg.row1_prefix = {7};
  CHECK_THROWS_AS(enumerate_loops(cfg, [](const LoopTable&) {}), Error);
  cfg.row1_prefix = {0, 0};
  CHECK_THROWS_AS(enumerate_loops(cfg, [](const LoopTable&) {}), Error);

  EnumerationConfig tiny;
  tiny.order = 1;
  tiny.row1_prefix = {0};
  CHECK_THROWS_AS(enumerate_loops(tiny, [](const LoopTable&) {}), Error);
}

TEST_CASE("unsupported orders") {
  EnumerationConfig cfg;
  cfg.order = 8;
  cfg.mode = EnumerationConfig::Mode::up_to_isomorphism;
  CHECK_THROWS_MATCHES(enumerate_loops(cfg, [](const LoopTable&) {}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::unsupported_order;
                       }));
  cfg.order = 0;
  cfg.mode = EnumerationConfig::Mode::normalized;
  CHECK_THROWS_AS(enumerate_loops(cfg, [](const LoopTable&) {}), Error);
  cfg.order = 17;
  CHECK_THROWS_AS(enumerate_loops(cfg, [](const LoopTable&) {}), Error);
}

TEST_CASE("builtin loops") {
  CHECK(builtin_loop("cyclic:1").order() == 1);
  CHECK(builtin_loop("cyclic:4").associativity_witness().associative());
  CHECK(builtin_loop("q5_nonassoc").associativity_witness().violation->a == 1);

  const LoopTable oct = builtin_loop("octonion16");
  CHECK(oct.order() == 16);
  CHECK(oct.identity() == 0);
  CHECK_FALSE(oct.associativity_witness().associative());
  CHECK(check_identity(oct, builtin_identity("kunen")).holds);

  // sign bookkeeping: e1*e2 = e4, e2*e1 = -e4, e1*e1 = -1, (-e1)*(-e1) = -1
  CHECK(oct.mul(1, 2) == 4);
  CHECK(oct.mul(2, 1) == 12);
  CHECK(oct.mul(1, 1) == 8);
  CHECK(oct.mul(9, 9) == 8);
  CHECK(oct.mul(8, 8) == 0); // (-1)*(-1) = +1

  CHECK_THROWS_MATCHES(builtin_loop("nope"), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::unknown_builtin;
                       }));
  CHECK_THROWS_AS(builtin_loop("cyclic:zero"), Error);
  CHECK_THROWS_AS(builtin_loop("cyclic:0"), Error);
}
