// Isomorphism search between small semigroups.

#ifndef SEMICOMM_ISOMORPHISM_HPP_
#define SEMICOMM_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "semicomm/semigroup.hpp"

namespace semicomm {

  //! A bijection between the elements of two semigroups.
  struct IsoWitness {
    std::vector<Element> mapping;
  };

  //! Whether \p w is a bijection from S to T with f(ab) = f(a)f(b) for all
  //! a, b (checked exhaustively).
  bool is_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T,
                      IsoWitness const& w);

  //! An isomorphism S -> T if one exists. Backtracking over element images
  //! with per-element invariants and forced images from products.
  std::optional<IsoWitness> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T);

  bool are_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T);

}  // namespace semicomm

#endif  // SEMICOMM_ISOMORPHISM_HPP_
