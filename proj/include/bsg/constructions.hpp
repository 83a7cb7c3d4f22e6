// Builders for the concrete semigroups used throughout: small groups,
// Brandt semigroups B(G, I), adjoined zeros and identities, and the
// power-set semigroup on P(G) x G with its homomorphism onto B(E, G).

#ifndef BSG_CONSTRUCTIONS_HPP_
#define BSG_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsg/semigroup.hpp"

namespace bsg {

  //! Size guards for the builders. The defaults keep every exhaustive check
  //! in the test suites well under a minute.
  struct ConstructionLimits {
    std::size_t max_powerset_group_order = 5;
    std::size_t max_brandt_size          = 200;
  };

  GroupTable trivial_group();

  //! Z_m written additively: i * j = (i + j) mod m. Throws InvalidOrder for
  //! m < 1.
  GroupTable cyclic_group(std::int64_t m);

  //! The six permutations of {0, 1, 2} in lexicographic one-line order,
  //! composed left to right: (p * q)(i) = q(p(i)).
  GroupTable symmetric_group_3();

  GroupTable direct_product(GroupTable const& g, GroupTable const& h);

  //! Least n >= 1 with g^n = 1 for every g.
  std::size_t exponent(GroupTable const& g);

  //! Element bookkeeping for B(G, I) with I = {0, ..., index_size - 1}.
  //!
  //! The zero is element 0; (i, g, j) is element 1 + (i |G| + g) |I| + j, so
  //! the nonzero elements are ordered lexicographically by (i, g, j).
  class BrandtCoords {
   public:
    struct Triple {
      std::size_t  i;
      element_type g;
      std::size_t  j;
      friend bool  operator==(Triple const&, Triple const&) = default;
    };

    BrandtCoords(GroupTable group, std::size_t index_size)
        : _group(std::move(group)), _index_size(index_size) {}

    GroupTable const& group() const noexcept {
      return _group;
    }
    std::size_t index_size() const noexcept {
      return _index_size;
    }
    element_type zero() const noexcept {
      return 0;
    }
    std::size_t size() const noexcept {
      return _index_size * _index_size * _group.order() + 1;
    }

    element_type encode(std::size_t i, element_type g, std::size_t j) const;
    //! nullopt for the zero.
    std::optional<Triple> decode(element_type x) const;

   private:
    GroupTable  _group;
    std::size_t _index_size;
  };

  struct Brandt {
    FiniteSemigroup semigroup;
    BrandtCoords    coords;
  };

  //! B(G, I) with |I| = index_size. Throws IndexTooSmall when index_size < 2,
  //! GroupTooLarge when the result exceeds limits.max_brandt_size.
  Brandt brandt(GroupTable const& g, std::int64_t index_size, ConstructionLimits const& limits = {});

  //! The 5-element Brandt semigroup B(E, 2).
  Brandt b2();

  //! S^0: a fresh absorbing zero at index 0, the elements of S shifted by one.
  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

  //! S^1: the elements of S keep their indices, the fresh identity is last.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

  //! Element bookkeeping for P(G) x G. A nonempty subset A is a bitmask over
  //! group elements; (A, g) is element (A - 1) |G| + g.
  class PowersetCoords {
   public:
    explicit PowersetCoords(GroupTable group) : _group(std::move(group)) {}

    GroupTable const& group() const noexcept {
      return _group;
    }
    std::size_t size() const noexcept {
      return ((std::size_t{1} << _group.order()) - 1) * _group.order();
    }

    element_type encode(std::uint32_t mask, element_type g) const;
    std::pair<std::uint32_t, element_type> decode(element_type x) const;

   private:
    GroupTable _group;
  };

  struct Powerset {
    FiniteSemigroup semigroup;
    PowersetCoords  coords;
  };

  //! (A, g)(B, h) = (A u gB, gh). Throws GroupTooLarge above
  //! limits.max_powerset_group_order.
  Powerset powerset_semigroup(GroupTable const& g, ConstructionLimits const& limits = {});

  //! The map P(G) x G -> B(E, G) sending ({a}, g) to (a, 1, g^-1 a) and every
  //! (A, g) with |A| >= 2 to zero. The index set of the target is the carrier
  //! of G, with target labels taken from the group. Throws GroupTooSmall for
  //! |G| < 2.
  Homomorphism phi_homomorphism(GroupTable const& g, ConstructionLimits const& limits = {});

  //! The subsemigroup {(k, 1, l) : k, l in K} u {0} of a Brandt semigroup over
  //! the trivial group. Throws BadSubset unless K has exactly two distinct
  //! members of the index set and the structure group is trivial.
  FiniteSemigroup restrict_brandt_to(Brandt const& b, std::vector<std::size_t> const& subset);

  //! A semigroup built from the name mini-language.
  struct Builtin {
    std::string                 name;
    FiniteSemigroup             semigroup;
    std::optional<GroupTable>   group;
    std::optional<BrandtCoords> brandt;
  };

  //! Parses and builds `E`, `Z<m>`, `S3`, `B2`, `B(<g>,<k>)`, `P(<g>)`,
  //! `<g>x<g>`, and the suffixes `^0` (adjoin zero) and `^1` (adjoin
  //! identity), with parentheses for grouping. Throws SyntaxError.
  Builtin parse_builtin(std::string_view text, ConstructionLimits const& limits = {});

}  // namespace bsg

#endif  // BSG_CONSTRUCTIONS_HPP_
