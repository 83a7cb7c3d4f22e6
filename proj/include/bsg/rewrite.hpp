// Word rewriting: single rule applications with an audit trail, the
// transformation of a repeated word into a product of cells
// y1 p1 y1 . y2 p2 y2 ... yk pk yk, the star word built from a cell form,
// and a bounded bidirectional search for derivations.

#ifndef BSG_REWRITE_HPP_
#define BSG_REWRITE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsg/words.hpp"

namespace bsg {

  enum class RuleDirection { LeftToRight, RightToLeft };

  RuleDirection flip(RuleDirection d) noexcept;

  //! Images of rule variables; every image must be nonempty.
  using Substitution = std::map<std::string, Word>;

  //! Rule tag of x^2 = x^(n+2) in traces.
  inline constexpr char const* kExpN = "EXP_N";
  //! Rule tag of xyx = (xy)^(n+1)x in traces.
  inline constexpr char const* kExpNRed = "EXP_N_RED";

  struct RewriteStep {
    std::size_t   position;
    std::string   rule_name;
    Identity      rule;
    RuleDirection direction;
    Substitution  substitution;
    Word          before;
    Word          after;
  };

  struct RewriteTrace {
    std::vector<RewriteStep> steps;

    bool empty() const noexcept {
      return steps.empty();
    }

    //! One line per step: `step <i>: <before> --[rule,LR|RL,pos]--> <after>`.
    std::string to_string() const;
  };

  //! Replaces the occurrence of the substituted source side of the rule at
  //! `position` by the substituted opposite side. Throws NoMatch if the
  //! source side does not occur there or the substitution leaves a rule
  //! variable unbound or empty.
  Word apply_rule_at(Word const&         w,
                     Identity const&     rule,
                     std::size_t         position,
                     Substitution const& substitution,
                     RuleDirection       direction);

  //! Whether every step reproduces its `after` word from its `before` word
  //! via apply_rule_at, and consecutive steps chain.
  bool replays(RewriteTrace const& trace);

  struct Rewritten {
    Word         word;
    RewriteTrace trace;
  };

  //! Repeatedly picks the leftmost variable occurring once, and rewrites the
  //! shortest cell zpz around it to (zp)^(n+1)z. Throws NotRepeated unless
  //! is_repeated(w), InvalidArgument for n = 0.
  Rewritten eliminate_single_occurrences(Word const& w, std::size_t n);

  //! y1 p1 y1 . y2 p2 y2 ... yk pk yk; bodies may be empty.
  struct CellForm {
    struct Cell {
      std::string head;
      Word        body;
      friend bool operator==(Cell const&, Cell const&) = default;
    };

    std::vector<Cell> cells;
    std::size_t       exponent_n = 1;

    Word        flatten() const;
    std::string to_string() const;  // "(x,yxy)(y,x)", an empty body shows as ""
  };

  struct Decomposition {
    CellForm     form;
    RewriteTrace trace;
  };

  //! Greedy decomposition of a word in which every variable occurs at least
  //! twice. The head of each new cell is the leftmost variable of the
  //! unprocessed remainder; if it recurs there, the cell ends at its
  //! rightmost occurrence. Otherwise the head occurs in an earlier body
  //! p_t = r y s (latest such t, rightmost occurrence), and the factor
  //! y (s y_t C) y, with C the cells after t, is rewritten to
  //! (y s y_t C)^(n+1) y. This leaves p_t = r (y s y_t C)^(n-1) y s and a new
  //! cell with body s y_t C.
  //!
  //! Throws HasSingleOccurrence, InvalidArgument for n = 0.
  Decomposition cell_decompose(Word const& w, std::size_t n);

  //! (pk yk)^(2n-2) pk ... (p1 y1)^(2n-2) p1. Throws EmptyStar when this is
  //! the empty word (n = 1 and every body empty).
  Word star_word(CellForm const& form);

  struct DeriveOptions {
    //! Maximum number of words expanded across both search directions.
    std::size_t max_steps = 10'000;
    //! Maximum length of a substitution image.
    std::size_t max_length = 4;
    //! Words longer than this are not explored; 0 means twice the longer
    //! side of the goal identity.
    std::size_t max_word_length = 0;
  };

  //! Bidirectional breadth-first search for a chain of single rule
  //! applications (either direction, every position) joining id.lhs to
  //! id.rhs. Returns a shortest chain found, ties broken by the
  //! lexicographically least meeting word; nullopt proves nothing.
  std::optional<RewriteTrace> derive_bounded(Identity const&              id,
                                             std::vector<Identity> const& basis,
                                             DeriveOptions const&         options = {});

}  // namespace bsg

#endif  // BSG_REWRITE_HPP_
