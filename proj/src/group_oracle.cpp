#include "semicomm/group_oracle.hpp"

#include <algorithm>

namespace semicomm {

  std::vector<Element> generated_subgroup(GroupSpec const&            G,
                                          std::vector<Element> const& gens) {
    std::vector<bool>    in(G.size(), false);
    std::vector<Element> members{G.identity()};
    in[G.identity()] = true;
    // Finite groups: closure under multiplication by generators suffices.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element g : gens) {
        Element const x = G.product(members[i], g);
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<Element> subgroup_commutator(GroupSpec const&            G,
                                           std::vector<Element> const& H,
                                           std::vector<Element> const& K) {
    std::vector<Element> gens;
    for (Element h : H) {
      for (Element k : K) {
        Element const c = G.product(
            G.product(G.inverse(h), G.inverse(k)), G.product(h, k));
        gens.push_back(c);
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generated_subgroup(G, gens);
  }

  namespace {
    std::vector<Element> whole(GroupSpec const& G) {
      std::vector<Element> all(G.size());
      for (Element x = 0; x < G.size(); ++x) {
        all[x] = x;
      }
      return all;
    }

    template <typename Step>
    std::vector<std::vector<Element>> chain(GroupSpec const& G, Step step) {
      std::vector<std::vector<Element>> terms{whole(G)};
      while (true) {
        auto next = step(terms.back());
        bool const repeated = next == terms.back();
        terms.push_back(std::move(next));
        if (repeated) {
          return terms;
        }
      }
    }

    std::optional<std::size_t> first_trivial(
        std::vector<std::vector<Element>> const& terms) {
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (terms[j].size() == 1) {
          return std::max<std::size_t>(j, 1);
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::vector<std::vector<Element>> group_lower_central_series(
      GroupSpec const& G) {
    auto const all = whole(G);
    return chain(G, [&](std::vector<Element> const& H) {
      return subgroup_commutator(G, H, all);
    });
  }

  std::vector<std::vector<Element>> group_derived_series(GroupSpec const& G) {
    return chain(G, [&](std::vector<Element> const& H) {
      return subgroup_commutator(G, H, H);
    });
  }

  std::optional<std::size_t> group_nilpotency_class(GroupSpec const& G) {
    // terms[j] is gamma_{j+1}.
    return first_trivial(group_lower_central_series(G));
  }

  std::optional<std::size_t> group_derived_length(GroupSpec const& G) {
    return first_trivial(group_derived_series(G));
  }

}  // namespace semicomm
