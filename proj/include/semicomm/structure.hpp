// Rees coordinates of completely simple semigroups and the direct-product
// decompositions of orthodox, abelian regular and inverse semigroups.

#ifndef SEMICOMM_STRUCTURE_HPP_
#define SEMICOMM_STRUCTURE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "semicomm/commutator.hpp"
#include "semicomm/constructors.hpp"
#include "semicomm/isomorphism.hpp"
#include "semicomm/series.hpp"

namespace semicomm {

  //! Two idempotents whose product is not idempotent.
  class NotOrthodox : public Error {
   public:
    NotOrthodox(std::string const& what, std::array<Element, 2> witness)
        : Error("NotOrthodox", what), _witness(witness) {}

    std::array<Element, 2> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<Element, 2> _witness;
  };

  struct Coordinatization {
    ReesSpec   spec;
    //! From rees_matrix(spec) to the original semigroup.
    IsoWitness witness;
  };

  //! Base idempotent e is the least idempotent; I indexes R-classes and
  //! Lambda indexes L-classes, the classes of e first and the others by
  //! least member; G is the H-class of e with e first. Element (i, g, l)
  //! corresponds to r_i g q_l with r_i the idempotent of R_i cap L_e and q_l
  //! the idempotent of R_e cap L_l, so the sandwich p_{l,j} = q_l r_j is
  //! normalized.
  //! \throws NotCompletelySimple
  Coordinatization rees_coordinatize(FiniteSemigroup const& S);

  //! The first pair (e, f) of idempotents, in increasing order of (e, f),
  //! with ef not idempotent.
  std::optional<std::array<Element, 2>> orthodoxy_witness(
      FiniteSemigroup const& S);

  enum class DecompositionKind { warne, orthodox_cs, inverse_group };

  std::string to_string(DecompositionKind kind);

  struct Decomposition {
    DecompositionKind kind;
    GroupSpec         group;
    std::size_t       left_size;
    std::size_t       right_size;
    //! From direct_product({group, left_zero(m), right_zero(k)}) to S.
    IsoWitness        witness;
  };

  //! S = G x left_zero(m) x right_zero(k) for orthodox completely simple S.
  //! \throws NotCompletelySimple, NotOrthodox
  Decomposition orthodox_cs_decomposition(FiniteSemigroup const& S);

  //! The decomposition with abelian group factor when S is abelian, nullopt
  //! otherwise.
  //! \throws NotRegular
  //! \throws TheoremViolation if S is abelian but admits no such
  //! decomposition.
  std::optional<Decomposition> warne_decomposition(FiniteSemigroup const& S,
                                                   Budget const& budget = {});

  //! For an inverse semigroup with a supernilpotency degree within
  //! \p max_arity, the group S itself; nullopt when no arity up to
  //! \p max_arity vanishes.
  //! \throws NotInverse
  //! \throws CubeSetTooLarge if the probe ran out of budget first.
  //! \throws TheoremViolation if S is supernilpotent but not a group.
  std::optional<GroupSpec> inverse_supernilpotent_decomposition(
      FiniteSemigroup const& S, std::size_t max_arity = DEFAULT_MAX_ARITY,
      Budget const& budget = {});

}  // namespace semicomm

#endif  // SEMICOMM_STRUCTURE_HPP_
