#include <random>

#include "catch_amalgamated.hpp"
#include "semicomm/constructors.hpp"
#include "semicomm/semigroup.hpp"
#include "support/oracles.hpp"

using namespace semicomm;
using Table = std::vector<std::vector<Element>>;

TEST_CASE("table validation", "[semigroup]") {
  CHECK_THROWS_AS(FiniteSemigroup(Table{}), InvalidArgument);
  CHECK_THROWS_AS(FiniteSemigroup(Table{{0, 1}, {1}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteSemigroup(Table{{0, 2}, {1, 0}}), OutOfRangeEntry);

  // x * y = y + 1 mod 2 is not associative: (0*0)*0 = 1, 0*(0*0) = 0.
  try {
    FiniteSemigroup(Table{{1, 0}, {1, 0}});
    FAIL("expected NotAssociative");
  } catch (NotAssociative const& e) {
    auto const [a, b, c] = e.witness();
    Table const t{{1, 0}, {1, 0}};
    CHECK(t[t[a][b]][c] != t[a][t[b][c]]);
  }
}

TEST_CASE("idempotents and natural order", "[semigroup]") {
  auto const S2 = paper_s2();
  CHECK(idempotents(S2).size() == 4);
  CHECK(is_idempotent_antichain(S2));

  auto const Z = adjoin_zero(trivial_semigroup());
  CHECK(idempotents(Z) == std::vector<Element>{0, 1});
  CHECK(natural_leq(Z, 1, 0));
  CHECK_FALSE(natural_leq(Z, 0, 1));
  CHECK_FALSE(is_idempotent_antichain(Z));

  auto const C3 = cyclic_group(3).underlying();
  CHECK_THROWS_AS(natural_leq(C3, 0, 1), NotIdempotent);
}

TEST_CASE("classification of standard examples", "[semigroup]") {
  auto const S2 = paper_s2();
  CHECK(is_regular(S2));
  CHECK(is_completely_simple(S2));
  CHECK(is_simple(S2));
  CHECK_FALSE(is_orthodox(S2));
  CHECK_FALSE(is_inverse_semigroup(S2));
  CHECK_FALSE(is_band(S2));

  auto const L = left_zero(3);
  CHECK(is_left_zero(L));
  CHECK_FALSE(is_right_zero(L));
  CHECK(is_band(L));
  CHECK(is_rectangular_band(L));
  CHECK(is_orthodox(L));
  CHECK_FALSE(is_inverse_semigroup(L));

  auto const B = rectangular_band(2, 3);
  CHECK(is_rectangular_band(B));
  CHECK(is_completely_simple(B));
  CHECK_FALSE(is_left_zero(B));

  auto const Q8 = builtin_group("Q8").underlying();
  CHECK(is_inverse_semigroup(Q8));
  CHECK(is_completely_simple(Q8));
  CHECK_FALSE(is_commutative(Q8));

  auto const Z = adjoin_zero(cyclic_group(2).underlying());
  CHECK(is_regular(Z));
  CHECK(is_inverse_semigroup(Z));
  CHECK_FALSE(is_simple(Z));
  CHECK_FALSE(is_completely_simple(Z));

  // The null semigroup xy = 0 is not regular.
  FiniteSemigroup const N(Table{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(is_regular(N));
  CHECK(is_commutative(N));
}

TEST_CASE("inverses", "[semigroup]") {
  auto const B = rectangular_band(2, 2);
  // Every element of a 2x2 rectangular band is an inverse of every other.
  CHECK(inverses_of(B, 0).size() == 4);
  auto const G = cyclic_group(4);
  for (Element x = 0; x < 4; ++x) {
    CHECK(inverses_of(G.underlying(), x) == std::vector<Element>{G.inverse(x)});
  }
}

TEST_CASE("Green's classes", "[semigroup]") {
  auto const gc = green_classes(rectangular_band(2, 3));
  CHECK(gc.r_count == 2);
  CHECK(gc.l_count == 3);

  auto const s2 = green_classes(paper_s2());
  CHECK(s2.r_count == 2);
  CHECK(s2.l_count == 2);

  auto const Z = adjoin_zero(trivial_semigroup());
  CHECK(principal_ideal(Z, 0) == std::vector<Element>{0, 1});
  CHECK(principal_ideal(Z, 1) == std::vector<Element>{1});
  CHECK(principal_right_ideal(Z, 1) == std::vector<Element>{1});
  CHECK(principal_left_ideal(Z, 0) == std::vector<Element>{0, 1});
}

TEST_CASE("direct products", "[semigroup]") {
  auto const C2 = cyclic_group(2).underlying();
  auto const P  = direct_product({C2, left_zero(2), right_zero(3)});
  CHECK(P.size() == 12);
  CHECK(P.has_product_metadata());
  CHECK(P.factor_orders() == std::vector<std::size_t>{2, 2, 3});
  for (Element x = 0; x < P.size(); ++x) {
    auto const c = P.coordinates(x);
    CHECK(P.encode(c) == x);
  }
  // Last factor fastest.
  CHECK(P.coordinates(1) == std::vector<Element>{0, 0, 1});
  CHECK(P.coordinates(3) == std::vector<Element>{0, 1, 0});
  for (Element x = 0; x < P.size(); ++x) {
    for (Element y = 0; y < P.size(); ++y) {
      auto const cx = P.coordinates(x), cy = P.coordinates(y);
      std::vector<Element> expect{C2(cx[0], cy[0]), cx[1], cy[2]};
      CHECK(P.coordinates(P(x, y)) == expect);
    }
  }
  CHECK(is_orthodox(P));
  CHECK(is_completely_simple(P));
  CHECK_FALSE(paper_s2().has_product_metadata());
}

TEST_CASE("Cayley text round trip", "[semigroup]") {
  for (auto const& S : {paper_s2(), left_zero(2), builtin_group("S3").underlying(),
                        adjoin_zero(cyclic_group(3).underlying())}) {
    auto const text = to_cayley_text(S);
    auto const T    = from_cayley_text(text);
    CHECK(T == S);
    CHECK(T.names() == S.names());
  }
  CHECK_THROWS_AS(from_cayley_text(""), FormatError);
  CHECK_THROWS_AS(from_cayley_text("2\n0 1\n"), FormatError);
  CHECK_THROWS_AS(from_cayley_text("2\n0 1\n1 x\n"), FormatError);
  CHECK_THROWS_AS(from_cayley_text("-1\n"), FormatError);
  CHECK_THROWS_AS(from_cayley_text("2\n1 0\n1 0\n"), NotAssociative);
  CHECK_THROWS_AS(read_cayley_file("/nonexistent/table.txt"), FormatError);
}

TEST_CASE("predicates are invariant under relabeling", "[semigroup][property]") {
  std::mt19937_64 rng(20261016);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oracle::brute_force_semigroups(n)) {
      auto const T = relabel(S, oracle::random_permutation(rng, n));
      CHECK(is_regular(S) == is_regular(T));
      CHECK(is_orthodox(S) == is_orthodox(T));
      CHECK(is_inverse_semigroup(S) == is_inverse_semigroup(T));
      CHECK(is_completely_simple(S) == is_completely_simple(T));
      CHECK(is_simple(S) == is_simple(T));
      CHECK(is_band(S) == is_band(T));
      CHECK(is_idempotent_antichain(S) == is_idempotent_antichain(T));
      CHECK(idempotents(S).size() == idempotents(T).size());
      CHECK(green_classes(S).r_count == green_classes(T).r_count);
      CHECK(green_classes(S).l_count == green_classes(T).l_count);
    }
  }
}

TEST_CASE("completely simple agrees with the Rees characterization",
          "[semigroup][property]") {
  // Order <= 3: completely simple iff regular with an antichain of
  // idempotents and a single ideal.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oracle::brute_force_semigroups(n)) {
      bool const expect = is_regular(S) && is_idempotent_antichain(S)
                          && principal_ideal(S, 0).size() == n;
      CHECK(is_completely_simple(S) == expect);
      if (is_inverse_semigroup(S)) {
        CHECK(is_orthodox(S));
      }
    }
  }
}
