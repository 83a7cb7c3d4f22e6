// Separation of regular elements by homomorphisms onto inverse completely
// 0-simple semigroups, the 0-minimal ideal checks, and recognition of
// groups, groups with zero and Brandt semigroups with explicit coordinates.

#ifndef BSG_STRUCTURE_HPP_
#define BSG_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsg/semigroup.hpp"
#include "bsg/words.hpp"

namespace bsg {

  enum class StructureKind { Group, GroupWithZero, Brandt, Other };

  std::string_view to_string(StructureKind kind) noexcept;

  struct StructureClass {
    StructureKind              kind = StructureKind::Other;
    //! The structure group: the input itself, its nonzero part, or f T f \ {0}
    //! for the least nonzero idempotent f.
    std::optional<GroupTable>  group_part;
    //! Number of nonzero idempotents.
    std::optional<std::size_t> index_size;
    //! For Brandt only: an isomorphism onto brandt(*group_part, *index_size).
    std::optional<Homomorphism> witness;

    //! "kind=Brandt |Q|=3 |J|=3"; absent parts print as "-".
    std::string report() const;
  };

  //! Never throws; anything that is not recognised is Other, without a
  //! group part or witness.
  StructureClass classify(FiniteSemigroup const& t);

  //! I_z = { u : z not in SuS }, tagged as an ideal when nonempty.
  ElementSet excluded_set(FiniteSemigroup const& s, element_type z);

  //! x ~ y iff for every t in SzS, xt and yt are equal or both lie in I_z.
  Congruence rho_z(FiniteSemigroup const& s, element_type z);

  //! S / rho_z, after first collapsing I_z by a Rees quotient when I_z is
  //! neither empty nor {0}. The natural map is the composite.
  Quotient rho_quotient(FiniteSemigroup const& s, element_type z);

  struct SeparationResult {
    element_type   chosen_z;
    Homomorphism   hom;
    StructureClass quotient_class;
  };

  //! Separates distinct regular a, b by rho_a, or failing that rho_b.
  //!
  //! Throws NotDistinct, NotRegular, or HypothesisFails when S violates
  //! xyx = (xy)^(n+1)x or x^n y^n = y^n x^n (the message carries the
  //! counterexample) or, should that ever happen, neither candidate
  //! separates.
  SeparationResult separate_regular_pair(FiniteSemigroup const& s,
                                         element_type           a,
                                         element_type           b,
                                         std::size_t            n,
                                         CheckOptions const&    options = {});

  //! The minimal nonzero ideals, or the least ideal when S has no zero.
  //! Every returned ideal contains the zero if there is one.
  std::vector<ElementSet> zero_minimal_ideals(FiniteSemigroup const& s);

  struct IdealReport {
    ElementSet     ideal;
    bool           has_regular;  // a regular element other than the zero
    bool           inverse;
    bool           completely_zero_simple;
    StructureClass structure;
  };

  struct Lemma4Report {
    std::vector<IdealReport> ideals;

    //! Every ideal containing a nonzero regular element is an inverse
    //! completely 0-simple semigroup.
    bool holds() const;

    std::string to_string(FiniteSemigroup const& s) const;
  };

  //! Throws HypothesisFails as separate_regular_pair does.
  Lemma4Report verify_lemma4(FiniteSemigroup const& s, std::size_t n, CheckOptions const& options = {});

}  // namespace bsg

#endif  // BSG_STRUCTURE_HPP_
