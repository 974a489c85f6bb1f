// Iterated commutator series and the degree predicates built on them.
//
// Degrees follow one convention: degree 1 means abelian ([1,1] = 0).
// For the lower central and derived series the degree is the index of the
// first term equal to 0. For supernilpotency the degree is one less than the
// least arity whose commutator [1, ..., 1] vanishes, so arity 2 vanishing
// gives degree 1 and arity 3 vanishing gives degree 2.

#ifndef SEMICOMM_SERIES_HPP_
#define SEMICOMM_SERIES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semicomm/commutator.hpp"
#include "semicomm/congruence.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

  enum class SeriesKind { lower_central, derived, supernilpotent_arity };

  std::string to_string(SeriesKind kind);

  struct SeriesReport {
    SeriesKind              kind = SeriesKind::lower_central;
    //! Term 1 first. For supernilpotent_arity, term j is the (j+1)-ary
    //! commutator [1, ..., 1].
    std::vector<Congruence> terms;
    //! A term repeated without reaching 0.
    bool                       stabilized = false;
    //! The computation stopped because a budget ran out.
    bool                       budget_exhausted = false;
    std::optional<std::size_t> degree;
  };

  constexpr std::size_t DEFAULT_MAX_TERMS = 8;
  constexpr std::size_t DEFAULT_MAX_ARITY = 3;

  //! Terms (1,1]^(1) = [1,1], (1,1]^(j+1) = [1, (1,1]^(j)].
  SeriesReport lower_central_series(FiniteSemigroup const& S,
                                    std::size_t max_terms = DEFAULT_MAX_TERMS,
                                    Budget const& budget    = {});

  //! Terms [1]^(1) = [1,1], [1]^(j+1) = [[1]^(j), [1]^(j)].
  SeriesReport derived_series(FiniteSemigroup const& S,
                              std::size_t   max_terms = DEFAULT_MAX_TERMS,
                              Budget const& budget    = {});

  //! The k-ary commutators [1, ..., 1] for k = 2, ..., max_arity, stopping
  //! at the first that vanishes. A CubeSetTooLarge at some arity ends the
  //! report with budget_exhausted set.
  //! \throws InvalidArgument if max_arity < 2.
  SeriesReport supernilpotency_report(FiniteSemigroup const& S,
                                      std::size_t max_arity = DEFAULT_MAX_ARITY,
                                      Budget const& budget  = {});

  std::optional<std::size_t>
  supernilpotency_degree(FiniteSemigroup const& S,
                         std::size_t   max_arity = DEFAULT_MAX_ARITY,
                         Budget const& budget    = {});

  bool is_abelian(FiniteSemigroup const& S, Budget const& budget = {});

}  // namespace semicomm

#endif  // SEMICOMM_SERIES_HPP_
