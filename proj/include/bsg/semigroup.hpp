// Finite semigroups given by multiplication tables, together with the
// element predicates, ideals, congruences, quotients and homomorphisms used
// by the rest of the library.

#ifndef BSG_SEMIGROUP_HPP_
#define BSG_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsg/error.hpp"

namespace bsg {

  //! Elements of a finite semigroup are dense indices in [0, size).
  using element_type = std::uint32_t;

  //! An immutable, validated multiplication table.
  //!
  //! Copies share the underlying table, so passing FiniteSemigroup by value
  //! is cheap. Instances are only produced by from_table / from_flat_table,
  //! which verify associativity, so every FiniteSemigroup is a semigroup.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    std::size_t size() const noexcept {
      return _data ? _data->size : 0;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _data->table[static_cast<std::size_t>(a) * _data->size + b];
    }

    element_type operator()(element_type a, element_type b) const noexcept {
      return product(a, b);
    }

    //! The designated zero, if one was supplied at construction.
    std::optional<element_type> zero() const noexcept {
      return _data ? _data->zero : std::nullopt;
    }

    bool has_labels() const noexcept {
      return _data && !_data->labels.empty();
    }

    //! Display string of an element; its decimal index when unlabelled.
    std::string label(element_type a) const;

    std::vector<std::string> const& labels() const noexcept;

    std::span<element_type const> row(element_type a) const noexcept {
      return {_data->table.data() + static_cast<std::size_t>(a) * _data->size,
              _data->size};
    }

    //! Row-major table, size() * size() entries.
    std::span<element_type const> table() const noexcept {
      return _data ? std::span<element_type const>(_data->table)
                   : std::span<element_type const>();
    }

    std::vector<std::vector<element_type>> rows() const;

    //! Equality of tables and designated zeros; labels are ignored.
    friend bool operator==(FiniteSemigroup const& s, FiniteSemigroup const& t);

   private:
    struct Data {
      std::size_t                 size = 0;
      std::vector<element_type>   table;
      std::optional<element_type> zero;
      std::vector<std::string>    labels;
    };

    friend FiniteSemigroup from_flat_table(std::size_t,
                                           std::vector<element_type>,
                                           std::optional<element_type>,
                                           std::vector<std::string>);

    std::shared_ptr<Data const> _data;
  };

  //! Validates a square table of integers and returns the semigroup.
  //!
  //! Throws Error with kind NotSquare, EntryOutOfRange, ZeroNotAbsorbing or
  //! NonAssociative; the latter carries the first failing triple (a, b, c) in
  //! lexicographic order as its data().
  FiniteSemigroup from_table(std::vector<std::vector<std::int64_t>> const& raw,
                             std::optional<std::int64_t> zero   = std::nullopt,
                             std::vector<std::string>    labels = {});

  //! As from_table, for a row-major table of already-narrowed indices.
  FiniteSemigroup from_flat_table(std::size_t                 size,
                                  std::vector<element_type>   table,
                                  std::optional<element_type> zero   = std::nullopt,
                                  std::vector<std::string>    labels = {});

  //! Copy of s with its labels replaced.
  FiniteSemigroup relabel(FiniteSemigroup const& s, std::vector<std::string> labels);

  //! Copy of s with a designated zero (which must be absorbing).
  FiniteSemigroup with_zero(FiniteSemigroup const& s, element_type zero);

  //! The designated zero of s, or else its absorbing element if it has one.
  std::optional<element_type> find_zero(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  //! A finite semigroup that is a group, with its identity and inverses.
  class GroupTable {
   public:
    //! Throws Error(NotAGroup) unless every row and column of the table is a
    //! permutation and an identity exists.
    explicit GroupTable(FiniteSemigroup carrier);

    FiniteSemigroup const& carrier() const noexcept {
      return _carrier;
    }
    std::size_t order() const noexcept {
      return _carrier.size();
    }
    element_type identity() const noexcept {
      return _identity;
    }
    element_type inverse(element_type g) const noexcept {
      return _inverse[g];
    }
    element_type product(element_type g, element_type h) const noexcept {
      return _carrier.product(g, h);
    }
    std::string label(element_type g) const {
      return _carrier.label(g);
    }

   private:
    FiniteSemigroup           _carrier;
    element_type              _identity = 0;
    std::vector<element_type> _inverse;
  };

  //! True when the table is a Latin square with an identity element.
  bool is_group(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  class Homomorphism {
   public:
    //! Throws Error(NotAHomomorphism) if map(xy) != map(x)map(y) for some
    //! pair, or Error(InvalidArgument) if the map has the wrong shape.
    Homomorphism(FiniteSemigroup source,
                 FiniteSemigroup target,
                 std::vector<element_type> map);

    FiniteSemigroup const& source() const noexcept {
      return _source;
    }
    FiniteSemigroup const& target() const noexcept {
      return _target;
    }
    element_type operator()(element_type x) const noexcept {
      return _map[x];
    }
    std::vector<element_type> const& map() const noexcept {
      return _map;
    }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const {
      return is_injective() && is_surjective();
    }

    //! Number of preimages of every target element.
    std::vector<std::size_t> fiber_sizes() const;

   private:
    FiniteSemigroup           _source;
    FiniteSemigroup           _target;
    std::vector<element_type> _map;
  };

  //! x -> second(first(x)).
  Homomorphism compose(Homomorphism const& first, Homomorphism const& second);

  ////////////////////////////////////////////////////////////////////////
  // Subsets, ideals and congruences
  ////////////////////////////////////////////////////////////////////////

  //! A sorted set of elements of some semigroup, tagged as an ideal when it
  //! is nonempty and closed under multiplication by S on both sides.
  class ElementSet {
   public:
    ElementSet() = default;
    ElementSet(FiniteSemigroup const& base, std::vector<element_type> members);

    std::size_t base_size() const noexcept {
      return _base_size;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }
    bool empty() const noexcept {
      return _members.empty();
    }
    bool is_ideal() const noexcept {
      return _ideal;
    }
    bool contains(element_type x) const noexcept;

    std::vector<element_type> const& members() const noexcept {
      return _members;
    }
    auto begin() const noexcept {
      return _members.begin();
    }
    auto end() const noexcept {
      return _members.end();
    }

    friend bool operator==(ElementSet const& a, ElementSet const& b) {
      return a._base_size == b._base_size && a._members == b._members;
    }

   private:
    std::size_t               _base_size = 0;
    std::vector<element_type> _members;
    bool                      _ideal = false;
  };

  //! A partition of a semigroup compatible with multiplication.
  class Congruence {
   public:
    //! Class labels may be arbitrary; they are renumbered by first
    //! appearance. Throws Error(IncompatiblePartition) if the partition is
    //! not a congruence.
    Congruence(FiniteSemigroup const& base, std::vector<element_type> class_of);

    static Congruence equality(FiniteSemigroup const& base);
    static Congruence universal(FiniteSemigroup const& base);

    std::size_t base_size() const noexcept {
      return _class_of.size();
    }
    std::size_t class_count() const noexcept {
      return _class_count;
    }
    element_type class_of(element_type x) const noexcept {
      return _class_of[x];
    }
    bool related(element_type x, element_type y) const noexcept {
      return _class_of[x] == _class_of[y];
    }
    std::vector<element_type> const& class_map() const noexcept {
      return _class_of;
    }
    std::vector<std::vector<element_type>> classes() const;

    bool is_equality() const noexcept {
      return _class_count == _class_of.size();
    }
    bool is_universal() const noexcept {
      return _class_count == 1;
    }

   private:
    std::vector<element_type> _class_of;
    std::size_t               _class_count = 0;
  };

  //! The quotient semigroup and the natural homomorphism onto it.
  struct Quotient {
    FiniteSemigroup semigroup;
    Homomorphism    natural;
  };

  //! SuS = { s u t : s, t in S } exactly; no identity is adjoined.
  ElementSet principal_ideal(FiniteSemigroup const& s, element_type u);

  //! The ideal generated by u, i.e. S^1 u S^1.
  ElementSet ideal_generated_by(FiniteSemigroup const& s, element_type u);

  ElementSet idempotents(FiniteSemigroup const& s);
  ElementSet inverses_of(FiniteSemigroup const& s, element_type a);
  bool       is_regular(FiniteSemigroup const& s, element_type a);
  bool       is_inverse_semigroup(FiniteSemigroup const& s);

  //! S is nontrivial, S = S^2, and SuS contains S \ {0} for every nonzero u.
  bool is_zero_simple(FiniteSemigroup const& s);

  //! is_zero_simple and some nonzero idempotent is primitive.
  bool is_completely_zero_simple(FiniteSemigroup const& s);

  //! Collapses the ideal to a zero placed at index 0; the remaining elements
  //! keep their relative order. Throws Error(NotAnIdeal).
  Quotient rees_quotient(FiniteSemigroup const& s, ElementSet const& ideal);

  //! Classes become elements, numbered as in the congruence.
  Quotient quotient_by_congruence(FiniteSemigroup const& s, Congruence const& c);

  //! The subsemigroup on the given elements, reindexed in increasing order.
  //! Throws Error(InvalidArgument) if the subset is not closed.
  FiniteSemigroup subsemigroup(FiniteSemigroup const& s,
                               std::vector<element_type> const& members);

  //! Componentwise product; (s, t) has index s * |T| + t.
  FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t);

  //! A bijective homomorphism s -> t if one exists. Backtracking over
  //! invariant-compatible candidates with closure propagation; intended for
  //! semigroups of up to a few dozen elements.
  std::optional<std::vector<element_type>> find_isomorphism(FiniteSemigroup const& s,
                                                            FiniteSemigroup const& t);

  bool is_associative(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Table files
  ////////////////////////////////////////////////////////////////////////

  //! Reads the text table format: `n <size>`, optional `zero <index>`,
  //! <size> rows of indices, optional `label <index> <string>` lines, with
  //! `#` comment lines anywhere.
  FiniteSemigroup read_table(std::istream& in);
  void            write_table(std::ostream& out, FiniteSemigroup const& s);
  FiniteSemigroup load_table_file(std::string const& path);
  void            save_table_file(std::string const& path, FiniteSemigroup const& s);

}  // namespace bsg

#endif  // BSG_SEMIGROUP_HPP_
