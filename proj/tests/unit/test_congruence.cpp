#include <random>

#include "catch_amalgamated.hpp"
#include "semicomm/congruence.hpp"
#include "semicomm/constructors.hpp"
#include "support/oracles.hpp"

using namespace semicomm;

namespace {
  std::vector<std::vector<std::size_t>> labels_of(CongruenceLattice const& L) {
    std::vector<std::vector<std::size_t>> out;
    for (auto const& c : L.members()) {
      out.emplace_back(c.class_vector().begin(), c.class_vector().end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Congruence from(std::vector<std::size_t> const& labels) {
    return Partition::from_labels(labels);
  }

  // Least congruence containing every listed pair, from the brute-force
  // list: the intersection of all congruences that contain them.
  Congruence least_containing(FiniteSemigroup const& S,
                              std::vector<std::pair<Element, Element>> pairs) {
    auto result = Partition::full(S.size());
    for (auto const& labels : oracle::brute_force_congruences(S)) {
      auto const c = from(labels);
      bool       ok = true;
      for (auto [a, b] : pairs) {
        ok = ok && c.related(a, b);
      }
      if (ok) {
        result = meet(result, c);
      }
    }
    return result;
  }
}  // namespace

TEST_CASE("partitions", "[congruence]") {
  auto const p = Partition::from_labels(std::vector<std::size_t>{5, 7, 7, 5});
  CHECK(p.class_vector() == std::vector<Element>{0, 1, 1, 0});
  CHECK(p.number_of_classes() == 2);
  CHECK(to_string(p) == "{0,3|1,2}");
  CHECK(parse_partition("{0,3|1,2}", 4) == p);
  CHECK(parse_partition("{1,2|0,3}", 4) == p);
  CHECK(p.blocks() == std::vector<std::vector<Element>>{{0, 3}, {1, 2}});
  CHECK(Partition::identity(3).is_identity());
  CHECK(Partition::full(3).is_full());
  CHECK(Partition::identity(3).is_contained_in(p.is_full() ? p : Partition::full(3)));
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), MalformedPartition);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), MalformedPartition);
  CHECK_THROWS_AS(parse_partition("{0,1|2", 3), MalformedPartition);
  CHECK_THROWS_AS(parse_partition("{0,1}", 3), MalformedPartition);
  CHECK_THROWS_AS(Partition::identity(2).is_contained_in(Partition::full(3)),
                  AlgebraMismatch);
}

TEST_CASE("lattice agrees with the partition filter", "[congruence][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oracle::brute_force_semigroups(n)) {
      CHECK(labels_of(all_congruences(S)) == oracle::brute_force_congruences(S));
    }
  }
  for (auto const& S : {builtin_group("S3").underlying(),
                        adjoin_zero(cyclic_group(2).underlying()),
                        rectangular_band(2, 2), left_zero(4)}) {
    CHECK(labels_of(all_congruences(S)) == oracle::brute_force_congruences(S));
  }
}

TEST_CASE("lattice order and shape", "[congruence]") {
  auto const L = all_congruences(builtin_group("S3").underlying());
  CHECK(L.size() == 3);
  CHECK(L[L.top()].is_full());
  CHECK(L[L.bottom()].is_identity());
  for (std::size_t i = 0; i < L.size(); ++i) {
    CHECK(L.leq(L.bottom(), i));
    CHECK(L.leq(i, L.top()));
    CHECK(L.index_of(L[i]) == i);
  }
  CHECK(L.covers().size() == 2);
  CHECK_THROWS_AS(all_congruences(left_zero(4), 5), LatticeTooLarge);

  auto const dot = lattice_to_dot(L);
  CHECK(dot.find("digraph congruences {") == 0);
  CHECK(dot.find("n2 -> n1") != std::string::npos);
}

TEST_CASE("principal congruences, joins and meets", "[congruence][oracle]") {
  std::mt19937_64 rng(11);
  for (auto const& S : oracle::brute_force_semigroups(3)) {
    for (Element a = 0; a < 3; ++a) {
      for (Element b = 0; b < 3; ++b) {
        CHECK(principal_congruence(S, a, b) == least_containing(S, {{a, b}}));
      }
    }
    auto const L = all_congruences(S);
    for (auto const& x : L.members()) {
      for (auto const& y : L.members()) {
        auto const j = join(x, y);
        CHECK(is_congruence(S, j));
        CHECK(L.contains(j));
        CHECK(x.is_contained_in(j));
        CHECK(y.is_contained_in(j));
        auto const m = meet(x, y);
        CHECK(L.contains(m));
        CHECK(m.is_contained_in(x));
      }
    }
  }
  auto const S2 = paper_s2();
  CHECK(principal_congruence(S2, 0, 1) == least_containing(S2, {{0, 1}}));
  CHECK(congruence_closure(S2, Partition::identity(8),
                           std::vector<std::pair<Element, Element>>{{0, 2}, {5, 7}})
        == least_containing(S2, {{0, 2}, {5, 7}}));
}

TEST_CASE("is_congruence", "[congruence]") {
  auto const S3 = builtin_group("S3");
  // Identity plus one transposition: a subgroup that is not normal.
  std::vector<Element> sub{0};
  for (Element x = 1; x < 6; ++x) {
    if (S3.product(x, x) == 0) {
      sub.push_back(x);
      break;
    }
  }
  CHECK_FALSE(is_normal_subgroup(S3, sub));
  CHECK_THROWS_AS(coset_congruence(S3, sub), MalformedTriple);
  std::vector<Element> a3;
  for (Element x = 0; x < 6; ++x) {
    if (S3.product(x, S3.product(x, x)) == 0) {
      a3.push_back(x);
    }
  }
  CHECK(a3.size() == 3);
  CHECK(is_normal_subgroup(S3, a3));
  auto const mod_a3 = coset_congruence(S3, a3);
  CHECK(mod_a3.number_of_classes() == 2);
  CHECK(is_congruence(S3.underlying(), mod_a3));
}

TEST_CASE("linked triples round trip", "[congruence]") {
  auto const spec = paper_s2_spec();
  auto const L    = all_congruences(paper_s2());
  CHECK(L.size() == 5);
  for (auto const& c : L.members()) {
    auto const t = linked_triple(spec, c);
    CHECK(congruence_from_triple(spec, t) == c);
    CHECK(verify_cong_product(spec, c));
  }
  // (1_I, {e}, 0_Lambda) is not linked: p_22 p_21^-1 = g lies outside N.
  LinkedTriple bad{Partition::full(2), std::vector<Element>{0},
                   Partition::identity(2)};
  CHECK_THROWS_AS(congruence_from_triple(spec, bad), NotLinked);
  LinkedTriple shape{Partition::full(3), std::vector<Element>{0},
                     Partition::identity(2)};
  CHECK_THROWS_AS(congruence_from_triple(spec, shape), MalformedTriple);
  CHECK_THROWS_AS(linked_triple(spec, Partition::from_labels(std::vector<std::size_t>{
                                          0, 0, 1, 1, 2, 2, 3, 3})),
                  NotACongruence);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto const r = oracle::random_rees_spec(rng, 3, 2, 2);
    auto const lattice = all_congruences(rees_matrix(r));
    for (auto const& c : lattice.members()) {
      CHECK(congruence_from_triple(r, linked_triple(r, c)) == c);
    }
  }
}

TEST_CASE("product congruences and skew-freeness", "[congruence]") {
  auto const C2  = cyclic_group(2).underlying();
  auto const GLR = direct_product({C2, left_zero(2), right_zero(2)});
  CHECK(is_skew_free(GLR));
  auto const lattice = all_congruences(GLR);
  for (auto const& theta : lattice.members()) {
    auto const parts = factor_restrictions(GLR, theta);
    REQUIRE(parts.size() == 3);
    CHECK(product_congruence(GLR, parts) == theta);
  }
  std::vector<Congruence> factors{Partition::full(2), Partition::identity(2),
                                  Partition::full(2)};
  auto const prod = product_congruence(GLR, factors);
  CHECK(prod.number_of_classes() == 2);
  CHECK(is_congruence(GLR, prod));

  // C2 x C2 has the diagonal congruence, which is not a product.
  CHECK_FALSE(is_skew_free(direct_product({C2, C2})));
  CHECK_THROWS_AS(product_congruence(paper_s2(), factors), MissingProductMetadata);
  std::vector<Congruence> wrong{Partition::full(3), Partition::full(2),
                                Partition::full(2)};
  CHECK_THROWS_AS(product_congruence(GLR, wrong), AlgebraMismatch);
}
