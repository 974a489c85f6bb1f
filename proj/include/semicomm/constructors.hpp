// Constructors for the algebras used throughout the library: groups,
// left/right-zero semigroups, rectangular bands, Rees matrix semigroups over
// groups with normalized sandwich matrices, and a few test helpers.

#ifndef SEMICOMM_CONSTRUCTORS_HPP_
#define SEMICOMM_CONSTRUCTORS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "semicomm/semigroup.hpp"

namespace semicomm {

  //! A finite group presented as a semigroup with its identity and inverses.
  class GroupSpec {
   public:
    //! \throws InvalidGroup if \p S has no two-sided identity or some element
    //! has no inverse.
    explicit GroupSpec(FiniteSemigroup S);

    FiniteSemigroup const& underlying() const noexcept {
      return _underlying;
    }
    std::size_t size() const noexcept {
      return _underlying.size();
    }
    Element identity() const noexcept {
      return _identity;
    }
    Element inverse(Element x) const noexcept {
      return _inverse[x];
    }
    Element product(Element a, Element b) const noexcept {
      return _underlying(a, b);
    }

   private:
    FiniteSemigroup      _underlying;
    Element              _identity;
    std::vector<Element> _inverse;
  };

  //! Data of a Rees matrix semigroup M[G; I, Lambda; P].
  //!
  //! Index 0 of I and of Lambda is the distinguished index: the sandwich
  //! matrix is normalized when row 0 and column 0 consist of the identity.
  //! sandwich[lambda][i] is the entry p_{lambda i}.
  struct ReesSpec {
    GroupSpec                         group;
    std::size_t                       i_size;
    std::size_t                       lambda_size;
    std::vector<std::vector<Element>> sandwich;
  };

  //! \throws InvalidArgument for a wrongly shaped or out-of-range sandwich.
  //! \throws NotNormalized naming the first offending entry.
  void validate(ReesSpec const& spec);

  //! Element id of (i, g, lambda): (i * |G| + g) * |Lambda| + lambda.
  Element rees_code(ReesSpec const& spec, std::size_t i, Element g,
                    std::size_t lambda);

  struct ReesCoordinates {
    std::size_t i;
    Element     g;
    std::size_t lambda;
  };

  ReesCoordinates rees_coordinates(ReesSpec const& spec, Element x);

  //! The semigroup on I x G x Lambda with
  //! (i, g, lambda)(j, h, mu) = (i, g p_{lambda j} h, mu).
  FiniteSemigroup rees_matrix(ReesSpec const& spec);

  //! M[C2; {1,2}, {1,2}; P] with p_22 = g and all other entries e.
  ReesSpec        paper_s2_spec();
  FiniteSemigroup paper_s2();

  FiniteSemigroup left_zero(std::size_t n);
  FiniteSemigroup right_zero(std::size_t n);
  //! left_zero(m) x right_zero(k), element (l, r) has id l * k + r.
  FiniteSemigroup rectangular_band(std::size_t m, std::size_t k);
  FiniteSemigroup trivial_semigroup();

  GroupSpec cyclic_group(std::size_t n);

  //! One of "S3", "D4", "Q8", "C2xC2"; identity is element 0.
  //! \throws UnknownGroupName otherwise.
  GroupSpec builtin_group(std::string const& name);

  //! Adds an absorbing element with id |S|.
  FiniteSemigroup adjoin_zero(FiniteSemigroup const& S);

  //! A copy of \p S with element x renamed to perm[x].
  FiniteSemigroup relabel(FiniteSemigroup const&      S,
                          std::vector<Element> const& perm);

  //! Resolve a builtin algebra name such as "paper_S2", "C4", "S3",
  //! "left_zero:3", "right_zero:2", "rect_band:2x3", "trivial",
  //! "adjoin_zero:C2".
  //! \throws UnknownAlgebra when the name is not recognised.
  FiniteSemigroup builtin_semigroup(std::string const& name);

  //! JSON document with keys group_table, i_size, lambda_size, sandwich and
  //! optionally group_names.
  std::string rees_spec_to_json(ReesSpec const& spec);
  //! \throws FormatError on malformed documents.
  ReesSpec    rees_spec_from_json(std::string const& text);

}  // namespace semicomm

#endif  // SEMICOMM_CONSTRUCTORS_HPP_
