#include "bsg/words.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <istream>
#include <limits>
#include <thread>

namespace bsg {

  bool is_variable_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
      return false;
    }
    return std::all_of(name.begin() + 1, name.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Word and Identity
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<std::string> symbols) : _symbols(std::move(symbols)) {
    for (auto const& s : _symbols) {
      if (!is_variable_name(s)) {
        throw Error(ErrorKind::InvalidArgument, "\"" + s + "\" is not a variable name");
      }
    }
  }

  std::set<std::string> Word::alphabet() const {
    return {_symbols.begin(), _symbols.end()};
  }

  std::size_t Word::occurrences(std::string_view var) const {
    return static_cast<std::size_t>(std::ranges::count(_symbols, var));
  }

  Word Word::factor(std::size_t pos, std::size_t len) const {
    Word w;
    w._symbols.assign(_symbols.begin() + static_cast<std::ptrdiff_t>(pos),
                      _symbols.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
  }

  std::string Word::to_string() const {
    std::string out;
    for (auto const& s : _symbols) {
      out += s;
    }
    return out;
  }

  Word& Word::operator*=(Word const& other) {
    _symbols.insert(_symbols.end(), other._symbols.begin(), other._symbols.end());
    return *this;
  }

  Word power(Word const& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) {
      out *= w;
    }
    return out;
  }

  Word mirror(Word const& w) {
    std::vector<std::string> s(w.symbols().rbegin(), w.symbols().rend());
    return Word(std::move(s));
  }

  Identity::Identity(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.empty() || rhs.empty()) {
      throw Error(ErrorKind::InvalidArgument, "both sides of an identity must be nonempty");
    }
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
  }

  std::set<std::string> Identity::alphabet() const {
    auto a = lhs.alphabet();
    a.merge(rhs.alphabet());
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class WordParser {
     public:
      explicit WordParser(std::string_view text) : _text(text) {}

      Word word(bool nested = false) {
        Word w;
        while (true) {
          skip();
          if (_pos == _text.size() || _text[_pos] == '=' || (nested && _text[_pos] == ')')) {
            break;
          }
          w *= factor();
        }
        if (w.empty()) {
          fail("expected a variable");
        }
        return w;
      }

      void expect(char c) {
        skip();
        if (_pos == _text.size() || _text[_pos] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      void finish() {
        skip();
        if (_pos != _text.size()) {
          fail("unexpected trailing input");
        }
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw Error(ErrorKind::SyntaxError,
                    what + " at position " + std::to_string(_pos) + " in \"" + std::string(_text)
                        + "\"",
                    {_pos});
      }

      void skip() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      static bool digit(char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }

      Word factor() {
        Word base;
        char const c = _text[_pos];
        if (c == '(') {
          ++_pos;
          base = word(true);
          expect(')');
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
          std::size_t const start = _pos++;
          while (_pos < _text.size() && digit(_text[_pos])) {
            ++_pos;
          }
          base = Word({std::string(_text.substr(start, _pos - start))});
        } else {
          fail(std::string("unexpected '") + c + "'");
        }
        skip();
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          skip();
          std::size_t const start = _pos;
          while (_pos < _text.size() && digit(_text[_pos])) {
            ++_pos;
          }
          if (start == _pos || _pos - start > 4) {
            _pos = start;
            fail("expected an exponent");
          }
          auto const k = std::stoul(std::string(_text.substr(start, _pos - start)));
          if (k == 0) {
            throw Error(ErrorKind::ZeroPower, "exponent 0 at position " + std::to_string(start),
                        {start});
          }
          return power(base, k);
        }
        return base;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    template <typename F>
    void for_each_content_line(std::istream& in, F&& f) {
      std::string line;
      while (std::getline(in, line)) {
        auto const b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') {
          continue;
        }
        f(line);
      }
    }
  }  // namespace

  Word parse_word(std::string_view text) {
    WordParser p(text);
    auto       w = p.word();
    p.finish();
    return w;
  }

  Identity parse_identity(std::string_view text) {
    WordParser p(text);
    auto       lhs = p.word();
    p.expect('=');
    auto rhs = p.word();
    p.finish();
    return Identity(std::move(lhs), std::move(rhs));
  }

  PositiveBasis read_positive_basis(std::istream& in) {
    PositiveBasis out;
    for_each_content_line(in, [&](std::string const& line) { out.words.push_back(parse_word(line)); });
    if (out.words.empty()) {
      throw Error(ErrorKind::InvalidArgument, "a positive basis needs at least one word");
    }
    return out;
  }

  std::vector<Identity> read_identities(std::istream& in) {
    std::vector<Identity> out;
    for_each_content_line(in, [&](std::string const& line) { out.push_back(parse_identity(line)); });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  element_type evaluate(FiniteSemigroup const& s, Word const& w, Evaluation const& e) {
    if (w.empty()) {
      throw Error(ErrorKind::InvalidArgument, "cannot evaluate the empty word");
    }
    auto const value = [&](std::string const& v) {
      auto it = e.assignment.find(v);
      if (it == e.assignment.end()) {
        throw Error(ErrorKind::UnassignedVariable, "variable " + v + " is not assigned");
      }
      if (it->second >= s.size()) {
        throw Error(ErrorKind::EntryOutOfRange, "variable " + v + " is assigned out of range");
      }
      return it->second;
    };
    element_type acc = value(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      acc = s(acc, value(w[i]));
    }
    return acc;
  }

  std::uint64_t evaluation_count(std::size_t size, std::size_t vars) noexcept {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < vars; ++i) {
      if (size != 0 && total > std::numeric_limits<std::uint64_t>::max() / size) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      total *= size;
    }
    return total;
  }

  namespace {
    // A word compiled to slots into the sorted variable list.
    std::vector<std::uint32_t> compile(Word const& w, std::vector<std::string> const& vars) {
      std::vector<std::uint32_t> out;
      out.reserve(w.size());
      for (auto const& v : w) {
        out.push_back(
            static_cast<std::uint32_t>(std::ranges::lower_bound(vars, v) - vars.begin()));
      }
      return out;
    }

    inline element_type fold(element_type const*                    table,
                             std::size_t                             n,
                             std::vector<std::uint32_t> const&       slots,
                             std::vector<element_type> const&        values) {
      element_type acc = values[slots[0]];
      for (std::size_t i = 1; i < slots.size(); ++i) {
        acc = table[acc * n + values[slots[i]]];
      }
      return acc;
    }

    // Index, in lexicographic order, of the first assignment rejected by
    // `ok`, or nullopt. Workers scan contiguous ranges and reduce by minimum.
    template <typename Check>
    std::optional<std::uint64_t> first_failure(std::size_t  radix,
                                               std::size_t  vars,
                                               std::uint64_t total,
                                               unsigned     jobs,
                                               Check const& ok) {
      std::atomic<std::uint64_t> best{total};
      auto const                 worker = [&](std::uint64_t lo, std::uint64_t hi) {
        if (lo >= hi) {
          return;
        }
        std::vector<element_type> values(vars);
        std::uint64_t             rest = lo;
        for (std::size_t k = vars; k-- > 0;) {
          values[k] = static_cast<element_type>(rest % radix);
          rest /= radix;
        }
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          if ((idx & 0xFFF) == 0 && best.load(std::memory_order_relaxed) < idx) {
            return;
          }
          if (!ok(values)) {
            std::uint64_t cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
          for (std::size_t k = vars; k-- > 0;) {
            if (++values[k] < radix) {
              break;
            }
            values[k] = 0;
          }
        }
      };
      if (jobs == 0) {
        jobs = total >= (1u << 16) ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
      }
      jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));
      if (jobs <= 1) {
        worker(0, total);
      } else {
        std::vector<std::jthread> pool;
        std::uint64_t const       chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
          pool.emplace_back(worker, j * chunk, std::min(total, (j + 1) * chunk));
        }
      }
      if (best.load() == total) {
        return std::nullopt;
      }
      return best.load();
    }

    std::vector<element_type> decode_index(std::uint64_t idx, std::size_t radix, std::size_t vars) {
      std::vector<element_type> values(vars);
      for (std::size_t k = vars; k-- > 0;) {
        values[k] = static_cast<element_type>(idx % radix);
        idx /= radix;
      }
      return values;
    }

    std::uint64_t checked_total(std::size_t size, std::size_t vars, CheckOptions const& options) {
      auto const total = evaluation_count(size, vars);
      if (total > options.budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "exhaustive check needs " + std::to_string(total)
                        + " evaluations, budget is " + std::to_string(options.budget),
                    {total});
      }
      return total;
    }

    Evaluation make_evaluation(std::vector<std::string> const& vars,
                               std::vector<element_type> const& values) {
      Evaluation e;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        e.assignment.emplace(vars[k], values[k]);
      }
      return e;
    }
  }  // namespace

  Verdict identity_holds(FiniteSemigroup const& s, Identity const& id, CheckOptions const& options) {
    auto const              alf = id.alphabet();
    std::vector<std::string> vars(alf.begin(), alf.end());
    auto const              total = checked_total(s.size(), vars.size(), options);
    auto const              lhs   = compile(id.lhs, vars);
    auto const              rhs   = compile(id.rhs, vars);
    element_type const*     table = s.table().data();
    std::size_t const       n     = s.size();

    auto const failure = first_failure(n, vars.size(), total, options.jobs, [&](auto const& values) {
      return fold(table, n, lhs, values) == fold(table, n, rhs, values);
    });
    Verdict v;
    if (!failure) {
      v.evaluations_checked = total;
      return v;
    }
    auto const values     = decode_index(*failure, n, vars.size());
    v.holds               = false;
    v.evaluations_checked = *failure + 1;
    v.counterexample      = Counterexample{make_evaluation(vars, values), fold(table, n, lhs, values),
                                      fold(table, n, rhs, values)};
    return v;
  }

  Verdict group_satisfies_w_eq_1(GroupTable const& g, Word const& w, CheckOptions const& options) {
    if (w.empty()) {
      throw Error(ErrorKind::InvalidArgument, "cannot evaluate the empty word");
    }
    auto const              alf = w.alphabet();
    std::vector<std::string> vars(alf.begin(), alf.end());
    auto const              total = checked_total(g.order(), vars.size(), options);
    auto const              slots = compile(w, vars);
    element_type const*     table = g.carrier().table().data();
    std::size_t const       n     = g.order();
    element_type const      one   = g.identity();

    auto const failure = first_failure(n, vars.size(), total, options.jobs, [&](auto const& values) {
      return fold(table, n, slots, values) == one;
    });
    Verdict v;
    if (!failure) {
      v.evaluations_checked = total;
      return v;
    }
    auto const values     = decode_index(*failure, n, vars.size());
    v.holds               = false;
    v.evaluations_checked = *failure + 1;
    v.counterexample = Counterexample{make_evaluation(vars, values), fold(table, n, slots, values), one};
    return v;
  }

  std::string describe(FiniteSemigroup const& s, Counterexample const& c) {
    std::string out;
    for (auto const& [var, value] : c.evaluation.assignment) {
      out += var + "=" + s.label(value) + " ";
    }
    return out + ": " + s.label(c.lhs_value) + " != " + s.label(c.rhs_value);
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity families
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Word const x{"x"};
    Word const y{"y"};
    Word const z{"z"};
  }  // namespace

  std::vector<Identity> trahtman_basis() {
    return {Identity(power(x, 2), power(x, 3)),
            Identity(x * y * x, x * y * x * y * x),
            Identity(power(x, 2) * power(y, 2), power(y, 2) * power(x, 2))};
  }

  Identity exponent_identity(std::size_t n) {
    return Identity(power(x, 2), power(x, n + 2));
  }

  Identity reduced_exponent_identity(std::size_t n) {
    return Identity(x * y * x, power(x * y, n + 1) * x);
  }

  Identity commuting_powers_identity(std::size_t n) {
    return Identity(power(x, n) * power(y, n), power(y, n) * power(x, n));
  }

  std::vector<Identity> theorem_basis(std::size_t n, PositiveBasis const& basis) {
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    std::vector<Identity> out;
    for (auto const& w : basis.words) {
      out.emplace_back(power(w, 2), w);
    }
    out.push_back(exponent_identity(n));
    out.push_back(reduced_exponent_identity(n));
    out.push_back(commuting_powers_identity(n));
    return out;
  }

  std::vector<Identity> abelian_corollary_basis(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    return {exponent_identity(n),
            reduced_exponent_identity(n),
            Identity(power(x, 2) * power(y, 2), power(y, 2) * power(x, 2)),
            Identity(x * y * x * z * x, x * z * x * y * x)};
  }

  Identity ln_identity(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, "L_n needs n >= 1");
    }
    Word palindrome;
    for (std::size_t i = 1; i <= n; ++i) {
      palindrome *= Word{"y" + std::to_string(i)};
    }
    palindrome *= mirror(palindrome);
    return Identity(power(x, 2) * palindrome, palindrome * power(x, 2));
  }

  PositiveBasis abelian_positive_basis(std::size_t n) {
    if (n < 2) {
      throw Error(ErrorKind::InvalidArgument, "the abelian positive basis needs n >= 2");
    }
    return PositiveBasis{{power(x, n), x * y * power(x, n - 1) * power(y, n - 1)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Repeated words and splitting
  ////////////////////////////////////////////////////////////////////////

  RepeatedCheck is_repeated(Word const& w) {
    // A position lies in a cell iff it lies between the first and last
    // occurrence of some variable.
    std::map<std::string, std::pair<std::size_t, std::size_t>> span;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto [it, fresh] = span.try_emplace(w[i], i, i);
      if (!fresh) {
        it->second.second = i;
      }
    }
    std::vector<int> cover(w.size() + 1, 0);
    for (auto const& [var, se] : span) {
      if (se.first < se.second) {
        ++cover[se.first];
        --cover[se.second + 1];
      }
    }
    std::set<std::string> covered;
    int                   depth = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      depth += cover[i];
      if (depth > 0) {
        covered.insert(w[i]);
      }
    }
    for (auto const& v : w) {
      if (!covered.contains(v)) {
        return {false, v};
      }
    }
    return {};
  }

  namespace {
    bool disjoint(std::set<std::string> const& a, std::set<std::string> const& b) {
      return std::ranges::none_of(a, [&](auto const& v) { return b.contains(v); });
    }
  }  // namespace

  Split split_identity(Brandt const& b, Identity const& id, std::string const& var, CheckOptions const& options) {
    auto const& s = b.semigroup;
    if (id.lhs.occurrences(var) != 1) {
      throw Error(ErrorKind::HypothesisViolated,
                  var + " must occur exactly once in " + id.lhs.to_string());
    }
    std::size_t const p = static_cast<std::size_t>(std::ranges::find(id.lhs, var) - id.lhs.begin());
    Split             out;
    out.u_prefix = id.lhs.factor(0, p);
    out.u_suffix = id.lhs.factor(p + 1, id.lhs.size() - p - 1);
    auto const alf_prefix = out.u_prefix.alphabet();
    auto const alf_suffix = out.u_suffix.alphabet();
    if (!disjoint(alf_prefix, alf_suffix)) {
      throw Error(ErrorKind::HypothesisViolated,
                  "the factors around " + var + " share a variable in " + id.lhs.to_string());
    }
    auto const verdict = identity_holds(s, id, options);
    if (!verdict.holds) {
      throw Error(ErrorKind::NoValidSplit,
                  id.to_string() + " fails: " + describe(s, *verdict.counterexample));
    }
    bool found = false;
    for (std::size_t q = 0; q < id.rhs.size() && !found; ++q) {
      if (id.rhs[q] != var) {
        continue;
      }
      auto prefix = id.rhs.factor(0, q);
      auto suffix = id.rhs.factor(q + 1, id.rhs.size() - q - 1);
      if (prefix.alphabet() == alf_prefix && suffix.alphabet() == alf_suffix) {
        out.v_prefix = std::move(prefix);
        out.v_suffix = std::move(suffix);
        found        = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::NoValidSplit,
                  "no occurrence of " + var + " in " + id.rhs.to_string() + " splits the alphabet");
    }
    auto const check_part = [&](Word const& u, Word const& v) -> std::optional<Verdict> {
      if (u.empty()) {
        return std::nullopt;
      }
      auto part = identity_holds(s, Identity(u, v), options);
      if (!part.holds) {
        throw Error(ErrorKind::NoValidSplit,
                    u.to_string() + " = " + v.to_string()
                        + " fails: " + describe(s, *part.counterexample));
      }
      return part;
    };
    out.prefix_verdict = check_part(out.u_prefix, out.v_prefix);
    out.suffix_verdict = check_part(out.u_suffix, out.v_suffix);
    return out;
  }

}  // namespace bsg
