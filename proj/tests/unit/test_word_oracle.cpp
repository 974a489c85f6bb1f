#include "catch_amalgamated.hpp"
#include "semicomm/commutator.hpp"
#include "semicomm/constructors.hpp"
#include "semicomm/word_oracle.hpp"
#include "support/oracles.hpp"

using namespace semicomm;

TEST_CASE("word oracle matches the cube engine on orders 2 and 3",
          "[word_oracle][oracle]") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (auto const& S : oracle::brute_force_semigroups(n)) {
      auto const L = all_congruences(S);
      for (auto const& a : L.members()) {
        for (auto const& b : L.members()) {
          std::vector<Congruence> const alphas{a, b};
          auto const cubes  = CubeSet::generate(S, alphas);
          auto const tuples = oracle_value_tuples(S, alphas);
          for (auto const& d : L.members()) {
            ++checked;
            CHECK(centralizes(cubes, d).holds
                  == oracle_condition_holds(tuples, d));
          }
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("word tuples lie in the cube set", "[word_oracle]") {
  auto const S   = paper_s2();
  auto const one = Partition::full(8);
  std::vector<Congruence> const alphas{one, one};
  auto const cubes = CubeSet::generate(S, alphas);
  WordOracleLimits limits;
  limits.max_word_len    = 3;
  limits.max_block_arity = 1;
  limits.max_order       = 8;
  auto const tuples = oracle_value_tuples(S, alphas, limits);
  CHECK(!tuples.empty());
  for (auto const& t : tuples) {
    CHECK(cubes.contains(t));
  }
}

TEST_CASE("x y separates corners on S2", "[word_oracle]") {
  // x = ((1,e,1), (1,e,2)) and y = ((1,e,1), (2,e,1)): the row x(1,e,1)
  // agrees on both y values while x(1,e,2) does not, since p_21 = e but
  // p_22 = g. Single letters never separate anything.
  auto const S   = paper_s2();
  auto const one = Partition::full(8);
  WordOracleLimits limits;
  limits.max_word_len    = 2;
  limits.max_block_arity = 1;
  limits.max_order       = 8;
  std::vector<Congruence> const alphas{one, one};
  CHECK_FALSE(oracle_centralizes_by_words(S, alphas, Partition::identity(8),
                                          limits));
  limits.max_word_len = 1;
  CHECK(oracle_centralizes_by_words(S, alphas, Partition::identity(8), limits));
}

TEST_CASE("word oracle limits", "[word_oracle]") {
  auto const S = builtin_group("S3").underlying();
  std::vector<Congruence> const alphas{Partition::full(6), Partition::full(6)};
  WordOracleLimits small;
  small.max_order = 5;
  CHECK_THROWS_AS(oracle_value_tuples(S, alphas, small), OracleBudgetExceeded);
  WordOracleLimits cheap;
  cheap.max_work = 10;
  CHECK_THROWS_AS(oracle_value_tuples(S, alphas, cheap), OracleBudgetExceeded);
}
