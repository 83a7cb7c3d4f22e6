// Words over named variables, plain identities, exhaustive satisfaction
// checking in finite semigroups, the named identity families, and the
// splitting of identities at a variable occurring once.

#ifndef BSG_WORDS_HPP_
#define BSG_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bsg/constructions.hpp"
#include "bsg/semigroup.hpp"

namespace bsg {

  //! True for an ASCII letter followed by zero or more digits.
  bool is_variable_name(std::string_view name) noexcept;

  //! A finite sequence of variables. The empty word exists as a value (cell
  //! bodies and split fragments may be empty) but is never a side of an
  //! Identity.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<std::string> symbols);
    Word(std::initializer_list<std::string> symbols)
        : Word(std::vector<std::string>(symbols)) {}

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    bool empty() const noexcept {
      return _symbols.empty();
    }
    std::string const& operator[](std::size_t i) const noexcept {
      return _symbols[i];
    }
    auto begin() const noexcept {
      return _symbols.begin();
    }
    auto end() const noexcept {
      return _symbols.end();
    }
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }

    //! alf(w), sorted.
    std::set<std::string> alphabet() const;
    std::size_t           occurrences(std::string_view var) const;

    //! The factor of length len starting at pos.
    Word factor(std::size_t pos, std::size_t len) const;

    //! Juxtaposition of the variable names, e.g. "xy1y1x".
    std::string to_string() const;

    Word& operator*=(Word const& other);

    friend Word operator*(Word a, Word const& b) {
      return a *= b;
    }
    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<std::string> _symbols;
  };

  Word power(Word const& w, std::size_t k);

  //! w read backwards.
  Word mirror(Word const& w);

  struct Identity {
    Identity(Word l, Word r);

    Word lhs;
    Word rhs;

    std::string           to_string() const;
    std::set<std::string> alphabet() const;

    friend bool operator==(Identity const&, Identity const&) = default;
    friend auto operator<=>(Identity const&, Identity const&) = default;
  };

  //! A positive identity basis {w = 1} of a group, stored as the words w.
  struct PositiveBasis {
    std::vector<Word> words;
  };

  //! word := factor+, factor := (var | "(" word ")") ("^" uint)?,
  //! var := letter digit*. Whitespace between factors is ignored.
  //! Throws SyntaxError (data() holds the position) or ZeroPower.
  Word     parse_word(std::string_view text);
  Identity parse_identity(std::string_view text);

  //! One word per line; blank and `#` lines are skipped.
  PositiveBasis read_positive_basis(std::istream& in);
  //! One identity per line; blank and `#` lines are skipped.
  std::vector<Identity> read_identities(std::istream& in);

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  struct Evaluation {
    std::map<std::string, element_type> assignment;
  };

  //! Left-to-right fold of the table. Throws UnassignedVariable, or
  //! InvalidArgument for the empty word.
  element_type evaluate(FiniteSemigroup const& s, Word const& w, Evaluation const& e);

  struct CheckOptions {
    //! Maximum number of evaluations an exhaustive check may enumerate.
    std::uint64_t budget = 100'000'000;
    //! Worker threads; 0 picks the hardware concurrency for large checks.
    unsigned jobs = 1;
  };

  struct Counterexample {
    Evaluation   evaluation;
    element_type lhs_value;
    element_type rhs_value;
  };

  struct Verdict {
    bool                          holds = true;
    std::optional<Counterexample> counterexample;
    std::uint64_t                 evaluations_checked = 0;
  };

  //! |S|^vars, saturating at UINT64_MAX.
  std::uint64_t evaluation_count(std::size_t size, std::size_t vars) noexcept;

  //! Enumerates every evaluation of the variables (sorted by name, the first
  //! variable most significant) and reports the lexicographically first
  //! counterexample. The result does not depend on options.jobs. Throws
  //! BudgetExceeded, with the required count in data(), when the evaluation
  //! space exceeds options.budget.
  Verdict identity_holds(FiniteSemigroup const& s, Identity const& id, CheckOptions const& options = {});

  //! Whether w evaluates to the identity of G under every evaluation; the
  //! counterexample's rhs_value is the group identity.
  Verdict group_satisfies_w_eq_1(GroupTable const& g, Word const& w, CheckOptions const& options = {});

  //! "x=(1,1,1) y=(1,1,2) : (1,1,2) != 0"
  std::string describe(FiniteSemigroup const& s, Counterexample const& c);

  ////////////////////////////////////////////////////////////////////////
  // Identity families
  ////////////////////////////////////////////////////////////////////////

  //! x^2 = x^3, xyx = xyxyx, x^2y^2 = y^2x^2.
  std::vector<Identity> trahtman_basis();

  //! x^2 = x^(n+2).
  Identity exponent_identity(std::size_t n);
  //! xyx = (xy)^(n+1)x.
  Identity reduced_exponent_identity(std::size_t n);
  //! x^n y^n = y^n x^n.
  Identity commuting_powers_identity(std::size_t n);

  //! w^2 = w for every w in the positive basis, followed by the three
  //! identities above.
  std::vector<Identity> theorem_basis(std::size_t n, PositiveBasis const& basis);

  //! x^2 = x^(n+2), xyx = (xy)^(n+1)x, x^2y^2 = y^2x^2, xyxzx = xzxyx.
  std::vector<Identity> abelian_corollary_basis(std::size_t n);

  //! x^2 y1...yn yn...y1 = y1...yn yn...y1 x^2. Throws InvalidArgument for n = 0.
  Identity ln_identity(std::size_t n);

  //! {x^n, x y x^(n-1) y^(n-1)}. Throws InvalidArgument for n < 2.
  PositiveBasis abelian_positive_basis(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Repeated words and splitting
  ////////////////////////////////////////////////////////////////////////

  struct RepeatedCheck {
    bool                       repeated = true;
    std::optional<std::string> witness;  // leftmost variable outside every cell
  };

  //! Whether every variable of w occurs inside some factor ypy.
  RepeatedCheck is_repeated(Word const& w);

  struct Split {
    Word                   u_prefix, u_suffix, v_prefix, v_suffix;
    std::optional<Verdict> prefix_verdict, suffix_verdict;  // absent for empty fragments
  };

  //! Splits lhs = u' y u'' and rhs = v' y v'' with alf(v') = alf(u') and
  //! alf(v'') = alf(u''), then checks u' = v' and u'' = v'' in b.
  //!
  //! Throws HypothesisViolated if y does not occur exactly once in lhs or
  //! alf(u') and alf(u'') meet, and NoValidSplit if the identity fails in b
  //! (the message carries the counterexample) or no admissible split exists.
  Split split_identity(Brandt const& b,
                       Identity const& id,
                       std::string const& y,
                       CheckOptions const& options = {});

}  // namespace bsg

#endif  // BSG_WORDS_HPP_
