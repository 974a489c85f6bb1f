// Classical group series computed from subgroups, with no reference to
// congruences or cubes. Used as an independent reference for the
// commutator-based degrees of groups.

#ifndef SEMICOMM_GROUP_ORACLE_HPP_
#define SEMICOMM_GROUP_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "semicomm/constructors.hpp"

namespace semicomm {

  //! Sorted elements of the subgroup generated by \p gens (the trivial
  //! subgroup if \p gens is empty).
  std::vector<Element> generated_subgroup(GroupSpec const&            G,
                                          std::vector<Element> const& gens);

  //! [H, K], generated by all h^-1 k^-1 h k.
  std::vector<Element> subgroup_commutator(GroupSpec const&            G,
                                           std::vector<Element> const& H,
                                           std::vector<Element> const& K);

  //! gamma_1 = G, gamma_{j+1} = [gamma_j, G], up to and including the first
  //! repeated term.
  std::vector<std::vector<Element>> group_lower_central_series(
      GroupSpec const& G);

  //! G^(0) = G, G^(j+1) = [G^(j), G^(j)], up to the first repeated term.
  std::vector<std::vector<Element>> group_derived_series(GroupSpec const& G);

  //! Least c >= 1 with gamma_{c+1} trivial, or nullopt if G is not
  //! nilpotent. The trivial group gets 1, matching degree 1 = abelian.
  std::optional<std::size_t> group_nilpotency_class(GroupSpec const& G);

  //! Least d >= 1 with G^(d) trivial, or nullopt if G is not solvable.
  std::optional<std::size_t> group_derived_length(GroupSpec const& G);

}  // namespace semicomm

#endif  // SEMICOMM_GROUP_ORACLE_HPP_
