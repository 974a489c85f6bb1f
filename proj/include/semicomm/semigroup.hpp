// Finite semigroups given by Cayley tables, together with the structural
// predicates (regular, orthodox, completely simple, inverse, band variants),
// the natural order on idempotents, Green's R- and L-classes, direct products
// and the Cayley text format.

#ifndef SEMICOMM_SEMIGROUP_HPP_
#define SEMICOMM_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "semicomm/error.hpp"

namespace semicomm {

  //! Elements of a finite semigroup are the integers 0, ..., n - 1.
  using Element = std::uint32_t;

  class NotAssociative : public Error {
   public:
    NotAssociative(Element a, Element b, Element c, std::string const& msg)
        : Error("NotAssociative", msg), _witness{a, b, c} {}

    //! A triple (a, b, c) with (ab)c != a(bc).
    std::array<Element, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<Element, 3> _witness;
  };

  //! A semigroup on {0, ..., n - 1} defined by an associative Cayley table.
  //!
  //! Instances are immutable once constructed; the constructor checks every
  //! table entry and every triple for associativity. A semigroup produced by
  //! direct_product() additionally records the orders of its factors, with
  //! element ids in mixed radix (last factor varies fastest).
  class FiniteSemigroup {
   public:
    //! \throws InvalidArgument if \p table is empty or not square.
    //! \throws OutOfRangeEntry if some entry is not in [0, n).
    //! \throws NotAssociative with the lexicographically least witness.
    explicit FiniteSemigroup(std::vector<std::vector<Element>> const& table,
                             std::vector<std::string> names = {});

    std::size_t size() const noexcept {
      return _n;
    }

    Element product(Element a, Element b) const noexcept {
      return _table[a * _n + b];
    }

    Element operator()(Element a, Element b) const noexcept {
      return product(a, b);
    }

    std::span<Element const> row(Element a) const noexcept {
      return {_table.data() + a * _n, _n};
    }

    std::span<Element const> flat_table() const noexcept {
      return _table;
    }

    std::vector<std::vector<Element>> table() const;

    //! Display names; empty when none were supplied.
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! Display name of \p x, falling back to its id.
    std::string name(Element x) const;

    bool has_product_metadata() const noexcept {
      return !_factor_orders.empty();
    }

    std::vector<std::size_t> const& factor_orders() const noexcept {
      return _factor_orders;
    }

    //! Coordinates of \p x in the factors of a direct product.
    std::vector<Element> coordinates(Element x) const;

    //! Inverse of coordinates().
    Element encode(std::span<Element const> coords) const;

    bool operator==(FiniteSemigroup const& that) const {
      return _n == that._n && _table == that._table;
    }

   private:
    friend FiniteSemigroup
    direct_product(std::vector<FiniteSemigroup> const& factors);

    std::size_t               _n;
    std::vector<Element>      _table;
    std::vector<std::string>  _names;
    std::vector<std::size_t>  _factor_orders;
  };

  //! Sorted ids of the idempotents.
  std::vector<Element> idempotents(FiniteSemigroup const& S);

  bool is_idempotent(FiniteSemigroup const& S, Element e);

  //! The natural partial order e <= f iff ef = fe = e.
  //! \throws NotIdempotent if either argument is not idempotent.
  bool natural_leq(FiniteSemigroup const& S, Element e, Element f);

  bool is_idempotent_antichain(FiniteSemigroup const& S);

  bool is_regular(FiniteSemigroup const& S);

  //! All y with xyx = x and yxy = y, sorted.
  std::vector<Element> inverses_of(FiniteSemigroup const& S, Element x);

  bool is_band(FiniteSemigroup const& S);
  bool is_left_zero(FiniteSemigroup const& S);
  bool is_right_zero(FiniteSemigroup const& S);
  bool is_rectangular_band(FiniteSemigroup const& S);
  bool is_commutative(FiniteSemigroup const& S);
  bool is_orthodox(FiniteSemigroup const& S);
  bool is_simple(FiniteSemigroup const& S);
  bool is_completely_simple(FiniteSemigroup const& S);
  bool is_inverse_semigroup(FiniteSemigroup const& S);

  //! Green's R and L relations, with S^1 handled implicitly.
  //!
  //! Class ids are assigned in order of first appearance, so the class of
  //! element 0 has id 0.
  struct GreenClasses {
    std::vector<std::size_t> r_class_of;
    std::vector<std::size_t> l_class_of;
    std::size_t              r_count = 0;
    std::size_t              l_count = 0;
  };

  GreenClasses green_classes(FiniteSemigroup const& S);

  //! Sorted principal ideals aS^1, S^1a and S^1aS^1.
  std::vector<Element> principal_right_ideal(FiniteSemigroup const& S,
                                             Element               a);
  std::vector<Element> principal_left_ideal(FiniteSemigroup const& S,
                                            Element               a);
  std::vector<Element> principal_ideal(FiniteSemigroup const& S, Element a);

  //! Componentwise product; the result carries the factor orders.
  //! \throws InvalidArgument if \p factors is empty.
  FiniteSemigroup direct_product(std::vector<FiniteSemigroup> const& factors);

  //! Cayley text format: the order n, then n rows of n ids, then an optional
  //! "# names: a b c" line.
  std::string     to_cayley_text(FiniteSemigroup const& S);
  FiniteSemigroup from_cayley_text(std::string const& text);
  FiniteSemigroup read_cayley_file(std::string const& path);

}  // namespace semicomm

#endif  // SEMICOMM_SEMIGROUP_HPP_
