#include "semicomm/structure.hpp"

#include <algorithm>
#include <map>

namespace semicomm {

  namespace {
    // Class labels renumbered so that the class of `first` is 0 and the
    // others follow in order of their least member.
    std::vector<std::size_t> renumber(std::vector<std::size_t> const& label,
                                      Element first, std::size_t& count) {
      std::map<std::size_t, std::size_t> index{{label[first], 0}};
      for (Element x = 0; x < label.size(); ++x) {
        if (index.find(label[x]) == index.end()) {
          std::size_t const next = index.size();
          index[label[x]]        = next;
        }
      }
      count = index.size();
      std::vector<std::size_t> out(label.size());
      for (Element x = 0; x < label.size(); ++x) {
        out[x] = index[label[x]];
      }
      return out;
    }
  }  // namespace

  Coordinatization rees_coordinatize(FiniteSemigroup const& S) {
    if (!is_completely_simple(S)) {
      throw NotCompletelySimple("semigroup is not completely simple");
    }
    std::size_t const n    = S.size();
    auto const        idem = idempotents(S);
    Element const     e    = idem.front();
    auto const        gc   = green_classes(S);
    std::size_t       m = 0, k = 0;
    auto const        row = renumber(gc.r_class_of, e, m);
    auto const        col = renumber(gc.l_class_of, e, k);

    // The maximal subgroup at e, identity first.
    std::vector<Element> group{e};
    for (Element x = 0; x < n; ++x) {
      if (x != e && row[x] == 0 && col[x] == 0) {
        group.push_back(x);
      }
    }
    std::size_t const          gsize = group.size();
    std::vector<std::size_t>   gindex(n, gsize);
    for (std::size_t g = 0; g < gsize; ++g) {
      gindex[group[g]] = g;
    }
    std::vector<std::vector<Element>> gtable(gsize,
                                             std::vector<Element>(gsize));
    for (std::size_t a = 0; a < gsize; ++a) {
      for (std::size_t b = 0; b < gsize; ++b) {
        gtable[a][b] = static_cast<Element>(gindex[S(group[a], group[b])]);
      }
    }
    std::vector<std::string> gnames;
    if (!S.names().empty()) {
      for (Element x : group) {
        gnames.push_back(S.name(x));
      }
    }

    std::vector<Element> r(m, 0), q(k, 0);
    for (Element x : idem) {
      if (col[x] == 0) {
        r[row[x]] = x;
      }
      if (row[x] == 0) {
        q[col[x]] = x;
      }
    }

    std::vector<std::vector<Element>> sandwich(k, std::vector<Element>(m));
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t j = 0; j < m; ++j) {
        sandwich[l][j] = static_cast<Element>(gindex[S(q[l], r[j])]);
      }
    }
    ReesSpec spec{GroupSpec(FiniteSemigroup(gtable, gnames)), m, k,
                  std::move(sandwich)};
    validate(spec);

    std::vector<Element> mapping(m * gsize * k);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t g = 0; g < gsize; ++g) {
        for (std::size_t l = 0; l < k; ++l) {
          mapping[rees_code(spec, i, static_cast<Element>(g), l)]
              = S(S(r[i], group[g]), q[l]);
        }
      }
    }
    Coordinatization out{std::move(spec), IsoWitness{std::move(mapping)}};
    if (!is_isomorphism(rees_matrix(out.spec), S, out.witness)) {
      throw TheoremViolation("Rees coordinates do not give an isomorphism");
    }
    return out;
  }

  std::optional<std::array<Element, 2>> orthodoxy_witness(
      FiniteSemigroup const& S) {
    auto const idem = idempotents(S);
    for (Element e : idem) {
      for (Element f : idem) {
        if (!is_idempotent(S, S(e, f))) {
          return std::array<Element, 2>{e, f};
        }
      }
    }
    return std::nullopt;
  }

  std::string to_string(DecompositionKind kind) {
    switch (kind) {
      case DecompositionKind::warne:
        return "warne";
      case DecompositionKind::orthodox_cs:
        return "orthodox";
      case DecompositionKind::inverse_group:
        return "inverse";
    }
    return "unknown";
  }

  Decomposition orthodox_cs_decomposition(FiniteSemigroup const& S) {
    if (!is_completely_simple(S)) {
      throw NotCompletelySimple("semigroup is not completely simple");
    }
    if (auto w = orthodoxy_witness(S)) {
      throw NotOrthodox("product of idempotents " + S.name((*w)[0]) + " and "
                            + S.name((*w)[1]) + " is not idempotent",
                        *w);
    }
    auto coords = rees_coordinatize(S);
    auto const& spec = coords.spec;
    std::size_t const gsize = spec.group.size();
    std::size_t const m     = spec.i_size;
    std::size_t const k     = spec.lambda_size;
    FiniteSemigroup const product = direct_product(
        {spec.group.underlying(), left_zero(m), right_zero(k)});

    // With every sandwich entry the identity, (g, i, l) -> (i, g, l) is an
    // isomorphism onto the Rees matrix semigroup.
    IsoWitness witness{std::vector<Element>(product.size())};
    for (std::size_t g = 0; g < gsize; ++g) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          witness.mapping[(g * m + i) * k + l] = coords.witness.mapping
              [rees_code(spec, i, static_cast<Element>(g), l)];
        }
      }
    }
    if (!is_isomorphism(product, S, witness)) {
      auto found = find_isomorphism(product, S);
      if (!found) {
        throw TheoremViolation(
            "orthodox completely simple semigroup is not a group times a "
            "rectangular band");
      }
      witness = std::move(*found);
    }
    return {DecompositionKind::orthodox_cs, spec.group, m, k,
            std::move(witness)};
  }

  std::optional<Decomposition> warne_decomposition(FiniteSemigroup const& S,
                                                   Budget const& budget) {
    if (!is_regular(S)) {
      throw NotRegular("semigroup is not regular");
    }
    if (!is_abelian(S, budget)) {
      return std::nullopt;
    }
    Decomposition d = [&] {
      try {
        return orthodox_cs_decomposition(S);
      } catch (NotCompletelySimple const&) {
        throw TheoremViolation("abelian regular semigroup is not completely "
                               "simple");
      } catch (NotOrthodox const&) {
        throw TheoremViolation("abelian regular semigroup is not orthodox");
      }
    }();
    if (!is_commutative(d.group.underlying())) {
      throw TheoremViolation("abelian regular semigroup has a non-abelian "
                             "group factor");
    }
    d.kind = DecompositionKind::warne;
    return d;
  }

  std::optional<GroupSpec> inverse_supernilpotent_decomposition(
      FiniteSemigroup const& S, std::size_t max_arity, Budget const& budget) {
    if (!is_inverse_semigroup(S)) {
      throw NotInverse("semigroup is not an inverse semigroup");
    }
    auto const report = supernilpotency_report(S, max_arity, budget);
    if (!report.degree) {
      if (report.budget_exhausted) {
        throw CubeSetTooLarge("supernilpotency probe ran out of budget");
      }
      return std::nullopt;
    }
    try {
      return GroupSpec(S);
    } catch (InvalidGroup const&) {
      throw TheoremViolation(
          "supernilpotent inverse semigroup is not a group");
    }
  }

}  // namespace semicomm
