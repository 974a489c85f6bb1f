// Bounded brute-force reading of the term condition.
//
// Polynomials of a semigroup are nonempty words over variables and
// constants. This oracle fixes, for every block i, max_block_arity variables
// that range over pairs of alpha_i, enumerates every word up to
// max_word_len letters, evaluates it at all 2^k corners and checks the
// implication directly. It shares no code with CubeSet and is used to
// cross-check it; its only blind spot is words longer than the bound.

#ifndef SEMICOMM_WORD_ORACLE_HPP_
#define SEMICOMM_WORD_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semicomm/congruence.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

  struct WordOracleLimits {
    std::size_t   max_word_len    = 6;
    std::size_t   max_block_arity = 2;
    std::size_t   max_order       = 6;
    std::uint64_t max_work        = 20'000'000'000ULL;
  };

  //! Every distinct tuple (p(corner))_{corner} reachable by a word within the
  //! limits, sorted lexicographically.
  //! \throws OracleBudgetExceeded if the order or estimated work is too large.
  std::vector<std::vector<Element>>
  oracle_value_tuples(FiniteSemigroup const&      S,
                      std::span<Congruence const> alphas,
                      WordOracleLimits const&     limits = {});

  //! The term-condition implication checked over explicit value tuples.
  bool oracle_condition_holds(std::vector<std::vector<Element>> const& tuples,
                              Congruence const& delta);

  bool oracle_centralizes_by_words(FiniteSemigroup const&      S,
                                   std::span<Congruence const> alphas,
                                   Congruence const&           delta,
                                   WordOracleLimits const&     limits = {});

}  // namespace semicomm

#endif  // SEMICOMM_WORD_ORACLE_HPP_
