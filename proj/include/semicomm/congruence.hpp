// Congruences of finite semigroups: translation-closed partitions,
// principal congruences, the congruence lattice, direct products of
// congruences, skew-freeness, and the linked triples that classify the
// congruences of a Rees matrix semigroup.

#ifndef SEMICOMM_CONGRUENCE_HPP_
#define SEMICOMM_CONGRUENCE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/constructors.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

  //! An equivalence relation on {0, ..., n - 1} in canonical form: the class
  //! id of x is the least member of the class of x.
  class Partition {
   public:
    Partition() = default;

    //! Canonicalizes an arbitrary labelling: x ~ y iff labels[x] == labels[y].
    static Partition from_labels(std::span<std::size_t const> labels);

    //! \throws MalformedPartition unless \p blocks cover {0, ..., n - 1}
    //! exactly once.
    static Partition from_blocks(std::size_t                            n,
                                 std::vector<std::vector<Element>> const& blocks);

    static Partition identity(std::size_t n);
    static Partition full(std::size_t n);

    std::size_t size() const noexcept {
      return _class_of.size();
    }

    Element class_of(Element x) const noexcept {
      return _class_of[x];
    }

    std::vector<Element> const& class_vector() const noexcept {
      return _class_of;
    }

    bool related(Element x, Element y) const noexcept {
      return _class_of[x] == _class_of[y];
    }

    std::size_t number_of_classes() const;

    //! Blocks sorted by least element, each block sorted.
    std::vector<std::vector<Element>> blocks() const;

    bool is_identity() const;
    bool is_full() const;

    //! Containment of relations.
    //! \throws AlgebraMismatch if the underlying sets differ.
    bool is_contained_in(Partition const& that) const;

    bool operator==(Partition const&) const = default;
    auto operator<=>(Partition const&) const = default;

   private:
    explicit Partition(std::vector<Element> class_of)
        : _class_of(std::move(class_of)) {}

    std::vector<Element> _class_of;
  };

  //! A congruence is a partition compatible with multiplication; the type is
  //! shared and the compatibility is checked by the functions that produce or
  //! accept congruences.
  using Congruence = Partition;

  //! Text form "{0,3|1,2}" with blocks sorted by least element.
  std::string to_string(Partition const& p);
  //! \throws MalformedPartition on malformed text.
  Partition   parse_partition(std::string const& text, std::size_t n);

  //! \throws MalformedPartition if \p p is on a set of the wrong size.
  bool is_congruence(FiniteSemigroup const& S, Partition const& p);

  //! The least congruence containing \p base and every pair in \p pairs.
  //! \p base must itself be a congruence on \p S.
  Congruence congruence_closure(FiniteSemigroup const&                     S,
                                Congruence const&                          base,
                                std::span<std::pair<Element, Element> const> pairs);

  Congruence principal_congruence(FiniteSemigroup const& S, Element a,
                                  Element b);

  //! \throws AlgebraMismatch if the underlying sets differ.
  Congruence join(Congruence const& a, Congruence const& b);
  Congruence meet(Congruence const& a, Congruence const& b);

  //! All congruences of a semigroup, sorted lexicographically by class
  //! vector (so 0 comes last and 1 first), with cached containment.
  class CongruenceLattice {
   public:
    explicit CongruenceLattice(std::vector<Congruence> members);

    std::size_t size() const noexcept {
      return _members.size();
    }
    std::vector<Congruence> const& members() const noexcept {
      return _members;
    }
    Congruence const& operator[](std::size_t i) const {
      return _members[i];
    }

    //! Position of \p c, or size() when absent.
    std::size_t index_of(Congruence const& c) const;
    bool        contains(Congruence const& c) const {
      return index_of(c) != size();
    }

    bool leq(std::size_t i, std::size_t j) const;

    std::size_t bottom() const;
    std::size_t top() const;

    //! Pairs (i, j) with members[i] < members[j] and nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

   private:
    std::vector<Congruence> _members;
    std::vector<bool>       _leq;
    bool                    _cached;
  };

  inline constexpr std::size_t DEFAULT_LATTICE_CAP = 100'000;

  //! Join-closure of the principal congruences.
  //! \throws LatticeTooLarge when more than \p cap members are found.
  CongruenceLattice all_congruences(FiniteSemigroup const& S,
                                    std::size_t cap = DEFAULT_LATTICE_CAP);

  //! Hasse diagram in DOT; nodes are numbered by lattice position.
  std::string lattice_to_dot(CongruenceLattice const& L);

  //! The componentwise congruence on a direct product.
  //! \throws MissingProductMetadata if \p product was not built by
  //! direct_product().
  //! \throws AlgebraMismatch if the factor orders do not match.
  Congruence product_congruence(FiniteSemigroup const&     product,
                                std::span<Congruence const> factors);

  //! The factor congruences obtained by restricting \p theta to the copy of
  //! each factor through element 0 of the others.
  std::vector<Congruence> factor_restrictions(FiniteSemigroup const& product,
                                              Congruence const&      theta);

  //! True iff every congruence of \p product is a product congruence.
  bool is_skew_free(FiniteSemigroup const& product,
                    std::size_t            cap = DEFAULT_LATTICE_CAP);

  //! The congruence of a group induced by the cosets of a normal subgroup.
  //! \throws MalformedTriple if \p normal is not a normal subgroup.
  Congruence coset_congruence(GroupSpec const&            G,
                              std::vector<Element> const& normal);

  bool is_normal_subgroup(GroupSpec const& G, std::vector<Element> const& N);

  //! (rho_I, N_rho, rho_Lambda) for a congruence of rees_matrix(spec).
  struct LinkedTriple {
    Partition            rho_i;
    std::vector<Element> normal_subgroup;
    Partition            rho_lambda;

    bool operator==(LinkedTriple const&) const = default;
  };

  //! \throws NotACongruence if \p rho is not a congruence.
  LinkedTriple linked_triple(ReesSpec const& spec, Congruence const& rho);

  //! (i, g, l) ~ (j, h, m) iff i rho_I j, gN = hN and l rho_Lambda m.
  //! \throws MalformedTriple if the components have the wrong shape or N is
  //! not normal.
  //! \throws NotLinked if the resulting relation is not a congruence.
  Congruence congruence_from_triple(ReesSpec const&     spec,
                                    LinkedTriple const& triple);

  //! Whether rho = rho_I x rho_G x rho_Lambda.
  bool verify_cong_product(ReesSpec const& spec, Congruence const& rho);

}  // namespace semicomm

#endif  // SEMICOMM_CONGRUENCE_HPP_
