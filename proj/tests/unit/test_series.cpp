#include <random>

#include "catch_amalgamated.hpp"
#include "semicomm/constructors.hpp"
#include "semicomm/group_oracle.hpp"
#include "semicomm/series.hpp"
#include "support/oracles.hpp"

using namespace semicomm;

TEST_CASE("S2 degrees", "[series]") {
  auto const S  = paper_s2();
  auto const lc = lower_central_series(S);
  auto const dv = derived_series(S);
  auto const sn = supernilpotency_report(S);
  CHECK(lc.degree == 2u);
  CHECK(dv.degree == 2u);
  CHECK(sn.degree == 2u);
  CHECK(supernilpotency_degree(S) == 2u);
  CHECK_FALSE(is_abelian(S));
  REQUIRE(lc.terms.size() == 2);
  CHECK(to_string(lc.terms[0]) == "{0,2|1,3|4,6|5,7}");
  CHECK(lc.terms[1].is_identity());
  CHECK(to_string(lc.kind) == "lower_central");
}

TEST_CASE("abelian and trivial cases", "[series]") {
  for (auto const& S : {left_zero(3), right_zero(2), trivial_semigroup(),
                        cyclic_group(4).underlying(), rectangular_band(2, 2)}) {
    CHECK(is_abelian(S));
    CHECK(lower_central_series(S).degree == 1u);
    CHECK(derived_series(S).degree == 1u);
    CHECK(supernilpotency_degree(S) == 1u);
  }
}

TEST_CASE("S3 stabilizes at the alternating quotient", "[series]") {
  auto const S  = builtin_group("S3").underlying();
  auto const lc = lower_central_series(S);
  CHECK_FALSE(lc.degree.has_value());
  CHECK(lc.stabilized);
  CHECK_FALSE(lc.budget_exhausted);
  CHECK(lc.terms.size() == 2);
  CHECK(lc.terms[0].number_of_classes() == 2);
  CHECK(derived_series(S).degree == 2u);
  auto const sn = supernilpotency_report(S);
  CHECK_FALSE(sn.degree.has_value());
  REQUIRE(sn.terms.size() == 2);
  CHECK(sn.terms[0] == sn.terms[1]);
  CHECK(sn.terms[0] == lc.terms[0]);
}

TEST_CASE("semigroup degrees match subgroup chains on groups",
          "[series][oracle]") {
  for (std::string name : {"C2", "C4", "C2xC2", "S3", "D4", "Q8"}) {
    auto const G = name == "C2" ? cyclic_group(2)
                   : name == "C4" ? cyclic_group(4)
                                  : builtin_group(name);
    CAPTURE(name);
    CHECK(lower_central_series(G.underlying()).degree
          == group_nilpotency_class(G));
    CHECK(derived_series(G.underlying()).degree == group_derived_length(G));
    CHECK(supernilpotency_degree(G.underlying()) == group_nilpotency_class(G));
  }
  CHECK(group_nilpotency_class(builtin_group("D4")) == 2u);
  CHECK(group_derived_length(builtin_group("S3")) == 2u);
  CHECK_FALSE(group_nilpotency_class(builtin_group("S3")).has_value());
  CHECK(group_nilpotency_class(cyclic_group(1)) == 1u);
}

TEST_CASE("derived terms lie below lower central terms",
          "[series][property]") {
  std::vector<FiniteSemigroup> algebras{paper_s2(),
                                        builtin_group("S3").underlying()};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oracle::brute_force_semigroups(n)) {
      algebras.push_back(S);
    }
  }
  std::mt19937_64 rng(23);
  for (auto const& S : algebras) {
    auto const lc = lower_central_series(S);
    auto const dv = derived_series(S);
    for (std::size_t k = 0; k < std::min(lc.terms.size(), dv.terms.size());
         ++k) {
      CHECK(dv.terms[k].is_contained_in(lc.terms[k]));
    }
    if (lc.degree && dv.degree) {
      CHECK(*dv.degree <= *lc.degree);
    }
    if (lc.degree) {
      CHECK(dv.degree.has_value());
    }
    auto const T = relabel(S, oracle::random_permutation(rng, S.size()));
    CHECK(lower_central_series(T).degree == lc.degree);
    CHECK(derived_series(T).degree == dv.degree);
    CHECK(supernilpotency_degree(T) == supernilpotency_degree(S));
  }
}

TEST_CASE("series budgets", "[series]") {
  auto const S = adjoin_zero(cyclic_group(2).underlying());
  auto const r = lower_central_series(S, 1);
  CHECK((r.degree.has_value() || r.stabilized || r.budget_exhausted));
  CHECK_THROWS_AS(supernilpotency_report(S, 1), InvalidArgument);
  Budget tiny;
  tiny.cube_cap = 2;
  auto const sn = supernilpotency_report(paper_s2(), 3, tiny);
  CHECK(sn.budget_exhausted);
  CHECK_FALSE(sn.degree.has_value());
}
