#include <random>

#include "catch_amalgamated.hpp"
#include "semicomm/commutator.hpp"
#include "semicomm/congruence.hpp"
#include "semicomm/constructors.hpp"
#include "semicomm/word_oracle.hpp"
#include "support/oracles.hpp"

using namespace semicomm;

namespace {
  Congruence bin(FiniteSemigroup const& S, Congruence const& a,
                 Congruence const& b, Budget const& budget = {}) {
    std::vector<Congruence> const alphas{a, b};
    return commutator(S, alphas, budget);
  }

  // The least delta in the lattice passing the word-based condition.
  Congruence oracle_commutator(FiniteSemigroup const& S,
                               CongruenceLattice const& L,
                               std::vector<Congruence> const& alphas) {
    auto const tuples = oracle_value_tuples(S, alphas);
    auto       result = Partition::full(S.size());
    for (auto const& d : L.members()) {
      if (oracle_condition_holds(tuples, d)) {
        result = meet(result, d);
      }
    }
    return result;
  }
}  // namespace

TEST_CASE("S2 commutators", "[commutator]") {
  auto const S   = paper_s2();
  auto const one = Partition::full(8);
  auto const zero = Partition::identity(8);

  auto const rho = bin(S, one, one);
  CHECK(to_string(rho) == "{0,2|1,3|4,6|5,7}");
  auto const t = linked_triple(paper_s2_spec(), rho);
  CHECK(t.rho_i.is_identity());
  CHECK(t.rho_lambda.is_identity());
  CHECK(t.normal_subgroup == std::vector<Element>{0, 1});

  CHECK(bin(S, one, rho) == zero);
  std::vector<Congruence> const three{one, one, one};
  CHECK(commutator(S, three) == zero);

  auto const fails = centralizes(S, std::vector<Congruence>{one, one}, zero);
  CHECK_FALSE(fails.holds);
  REQUIRE(fails.witness.has_value());
  CHECK(fails.witness->size() == 4);
  CHECK(centralizes(S, std::vector<Congruence>{one, one}, rho).holds);
}

TEST_CASE("commutator agrees with the word oracle on small orders",
          "[commutator][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oracle::brute_force_semigroups(n)) {
      auto const L = all_congruences(S);
      for (auto const& a : L.members()) {
        for (auto const& b : L.members()) {
          std::vector<Congruence> const alphas{a, b};
          CHECK(bin(S, a, b) == oracle_commutator(S, L, alphas));
        }
      }
    }
  }
}

TEST_CASE("commutator invariants", "[commutator][property]") {
  std::vector<FiniteSemigroup> algebras{
      paper_s2(), builtin_group("S3").underlying(),
      adjoin_zero(cyclic_group(2).underlying()), rectangular_band(2, 2),
      direct_product({cyclic_group(2).underlying(), left_zero(2)})};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oracle::brute_force_semigroups(n)) {
      algebras.push_back(S);
    }
  }
  for (auto const& S : algebras) {
    auto const L = all_congruences(S);
    for (auto const& a : L.members()) {
      for (auto const& b : L.members()) {
        auto const c = bin(S, a, b);
        CHECK(is_congruence(S, c));
        CHECK(c.is_contained_in(meet(a, b)));
        CHECK(centralizes(S, std::vector<Congruence>{a, b}, c).holds);
        // Every lattice member that passes lies above the commutator.
        for (auto const& d : L.members()) {
          if (centralizes(S, std::vector<Congruence>{a, b}, d).holds) {
            CHECK(c.is_contained_in(d));
          }
        }
        std::vector<Congruence> const three{Partition::full(S.size()), a, b};
        CHECK(commutator(S, three).is_contained_in(c));
      }
    }
  }
}

TEST_CASE("commutator is invariant under relabeling", "[commutator][property]") {
  std::mt19937_64 rng(41);
  for (auto const& S : {paper_s2(), builtin_group("S3").underlying(),
                        adjoin_zero(rectangular_band(1, 2))}) {
    auto const perm = oracle::random_permutation(rng, S.size());
    auto const T    = relabel(S, perm);
    auto const L    = all_congruences(S);
    for (auto const& a : L.members()) {
      for (auto const& b : L.members()) {
        auto move = [&](Congruence const& p) {
          std::vector<std::size_t> labels(S.size());
          for (Element x = 0; x < S.size(); ++x) {
            labels[perm[x]] = p.class_vector()[x];
          }
          return Partition::from_labels(labels);
        };
        CHECK(move(bin(S, a, b)) == bin(T, move(a), move(b)));
      }
    }
  }
}

TEST_CASE("worker count does not change results", "[commutator]") {
  auto const S   = builtin_group("D4").underlying();
  auto const one = Partition::full(8);
  Budget     serial;
  Budget     parallel;
  parallel.workers = 4;
  std::vector<Congruence> const three{one, one, one};
  auto const a = CubeSet::generate(S, three, serial);
  auto const b = CubeSet::generate(S, three, parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.code(i) == b.code(i));
  }
  CHECK(commutator(S, a) == commutator(S, b));
  CHECK(commutator(S, a) == Partition::identity(8));
}

TEST_CASE("cube sets", "[commutator]") {
  auto const S   = left_zero(2);
  auto const one = Partition::full(2);
  std::vector<Congruence> const alphas{one, one};
  auto const cubes = CubeSet::generate(S, alphas);
  CHECK(cubes.dimension() == 2);
  CHECK(cubes.cube_length() == 4);
  for (std::size_t i = 1; i < cubes.size(); ++i) {
    CHECK(cubes.code(i - 1) < cubes.code(i));
  }
  CHECK(cubes.contains(std::vector<Element>{0, 0, 0, 0}));
  // x * y over left zero only sees x, the alpha_0 coordinate.
  CHECK(cubes.contains(std::vector<Element>{0, 1, 0, 1}));

  CHECK_THROWS_AS(CubeSet::generate(S, std::vector<Congruence>{}),
                  InvalidArgument);
  CHECK_THROWS_AS(CubeSet::generate(S, std::vector<Congruence>{
                                           Partition::full(3), one}),
                  InvalidArgument);
  CHECK_THROWS_AS(commutator(S, std::vector<Congruence>{one}),
                  InvalidArgument);

  Budget tiny;
  tiny.cube_cap = 3;
  CHECK_THROWS_AS(CubeSet::generate(paper_s2(),
                                    std::vector<Congruence>{
                                        Partition::full(8), Partition::full(8)},
                                    tiny),
                  CubeSetTooLarge);
  Budget flat;
  flat.max_dimension = 2;
  CHECK_THROWS_AS(CubeSet::generate(S, std::vector<Congruence>{one, one, one},
                                    flat),
                  CubeSetTooLarge);
}

TEST_CASE("commutators of product congruences factor",
          "[commutator][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    auto const G = oracle::random_rees_spec(rng, 4, 1, 1).group;
    auto const GLR = direct_product({G.underlying(), left_zero(2), right_zero(2)});
    auto const L   = all_congruences(GLR);
    for (auto const& a : L.members()) {
      for (auto const& b : L.members()) {
        auto const fa = factor_restrictions(GLR, a);
        auto const fb = factor_restrictions(GLR, b);
        std::vector<Congruence> parts{bin(G.underlying(), fa[0], fb[0]),
                                      bin(left_zero(2), fa[1], fb[1]),
                                      bin(right_zero(2), fa[2], fb[2])};
        CHECK(bin(GLR, a, b) == product_congruence(GLR, parts));
      }
    }
  }
}
