// Higher term-condition commutators of finite semigroups.
//
// For congruences alpha_0, ..., alpha_{k-1} a cube is a tuple of 2^k
// elements indexed by bit-vectors: entry b is p(x_0, ..., x_{k-1}) where
// x_i is the a-tuple of block i when bit i of b is 0 and the b-tuple when
// it is 1. The last block plays the role of the centralized congruence, so
// entry b and entry b | (1 << (k-1)) form the "c" and "d" values of one row.
//
// Semigroup polynomials are words in variables and constants, so the set of
// all such value cubes is the subsemigroup of S^(2^k) generated by the
// constant cubes and, for each i and each pair (a, a') in alpha_i, the
// cube that is a where bit i is 0 and a' where it is 1. CubeSet computes that
// subsemigroup; centralizes() and commutator() read the term condition off
// it.

#ifndef SEMICOMM_COMMUTATOR_HPP_
#define SEMICOMM_COMMUTATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semicomm/congruence.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

  //! Resource limits shared by the cube-based computations.
  struct Budget {
    std::uint64_t cube_cap      = 50'000'000;
    std::size_t   max_dimension = 4;
    std::size_t   lattice_cap   = DEFAULT_LATTICE_CAP;
    std::size_t   workers       = 1;
  };

  //! Entries of a cube are stored compactly; orders above 65535 are rejected.
  using CubeEntry = std::uint16_t;

  class CubeSet {
   public:
    //! \throws InvalidArgument if \p alphas is empty or of the wrong order.
    //! \throws CubeSetTooLarge if the dimension exceeds the budget, the codes
    //! do not fit into 64 bits, or more than budget.cube_cap cubes arise.
    static CubeSet generate(FiniteSemigroup const&      S,
                            std::span<Congruence const> alphas,
                            Budget const&               budget = {});

    std::size_t dimension() const noexcept {
      return _dimension;
    }

    //! 2^dimension.
    std::size_t cube_length() const noexcept {
      return _length;
    }

    std::size_t size() const noexcept {
      return _codes.size();
    }

    //! The i-th cube in increasing code order.
    std::span<CubeEntry const> cube(std::size_t i) const noexcept {
      return {_entries.data() + i * _length, _length};
    }

    //! Base-n code of a cube, digit b being entry b.
    std::uint64_t code(std::size_t i) const noexcept {
      return _codes[i];
    }

    bool contains(std::span<Element const> cube) const;

   private:
    CubeSet() = default;

    std::size_t                _order     = 0;
    std::size_t                _dimension = 0;
    std::size_t                _length    = 0;
    std::vector<std::uint64_t> _codes;
    std::vector<CubeEntry>     _entries;
  };

  //! Outcome of a term-condition check; on failure \c witness holds a cube
  //! (in bit-vector index order) whose premises hold modulo delta but whose
  //! conclusion does not.
  struct CentralityResult {
    bool                                holds = true;
    std::optional<std::vector<Element>> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! Whether the cube set satisfies the term condition modulo \p delta.
  CentralityResult centralizes(CubeSet const& cubes, Congruence const& delta);

  //! C(alphas[0], ..., alphas[k-2], alphas[k-1]; delta), the last entry
  //! playing the centralized congruence.
  CentralityResult centralizes(FiniteSemigroup const&      S,
                               std::span<Congruence const> alphas,
                               Congruence const&           delta,
                               Budget const&               budget = {});

  //! The least congruence delta with C(alphas; delta) on a given cube set.
  Congruence commutator(FiniteSemigroup const& S, CubeSet const& cubes);

  //! The k-ary commutator [alphas[0], ..., alphas[k-1]] for k >= 2.
  //! \throws InvalidArgument if fewer than two congruences are given.
  Congruence commutator(FiniteSemigroup const&      S,
                        std::span<Congruence const> alphas,
                        Budget const&               budget = {});

}  // namespace semicomm

#endif  // SEMICOMM_COMMUTATOR_HPP_
