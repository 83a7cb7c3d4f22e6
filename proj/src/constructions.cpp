#include "bsg/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>

namespace bsg {

  namespace {
    // Appends primes until the label is unused.
    std::string fresh_label(std::string base, std::vector<std::string> const& taken) {
      while (std::ranges::find(taken, base) != taken.end()) {
        base += "'";
      }
      return base;
    }

    std::vector<std::string> labels_of(FiniteSemigroup const& s) {
      std::vector<std::string> out;
      for (element_type x = 0; x < s.size(); ++x) {
        out.push_back(s.label(x));
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  GroupTable trivial_group() {
    return GroupTable(from_flat_table(1, {0}, std::nullopt, {"1"}));
  }

  GroupTable cyclic_group(std::int64_t m) {
    if (m < 1) {
      throw Error(ErrorKind::InvalidOrder, "cyclic group order must be at least 1, got "
                                               + std::to_string(m));
    }
    auto const                n = static_cast<std::size_t>(m);
    std::vector<element_type> table(n * n);
    std::vector<std::string>  labels;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = static_cast<element_type>((i + j) % n);
      }
      labels.push_back(i == 0 ? "1" : i == 1 ? "a" : "a^" + std::to_string(i));
    }
    return GroupTable(from_flat_table(n, std::move(table), std::nullopt, std::move(labels)));
  }

  GroupTable symmetric_group_3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::ranges::next_permutation(p).found);
    auto const index_of = [&](std::array<int, 3> const& q) {
      return static_cast<element_type>(std::ranges::find(perms, q) - perms.begin());
    };
    std::vector<element_type> table(36);
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) {
          c[i] = perms[b][perms[a][i]];
        }
        table[a * 6 + b] = index_of(c);
      }
    }
    // cycle notation of 012, 021, 102, 120, 201, 210
    std::vector<std::string> labels{"1", "(12)", "(01)", "(012)", "(021)", "(02)"};
    return GroupTable(from_flat_table(6, std::move(table), std::nullopt, std::move(labels)));
  }

  GroupTable direct_product(GroupTable const& g, GroupTable const& h) {
    return GroupTable(direct_product(g.carrier(), h.carrier()));
  }

  std::size_t exponent(GroupTable const& g) {
    std::size_t result = 1;
    for (element_type x = 0; x < g.order(); ++x) {
      std::size_t  order = 1;
      element_type p     = x;
      while (p != g.identity()) {
        p = g.product(p, x);
        ++order;
      }
      result = std::lcm(result, order);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Brandt semigroups
  ////////////////////////////////////////////////////////////////////////

  element_type BrandtCoords::encode(std::size_t i, element_type g, std::size_t j) const {
    if (i >= _index_size || j >= _index_size || g >= _group.order()) {
      throw Error(ErrorKind::InvalidArgument, "Brandt coordinates out of range");
    }
    return static_cast<element_type>(1 + (i * _group.order() + g) * _index_size + j);
  }

  std::optional<BrandtCoords::Triple> BrandtCoords::decode(element_type x) const {
    if (x == 0) {
      return std::nullopt;
    }
    if (x >= size()) {
      throw Error(ErrorKind::InvalidArgument, "not an element of this Brandt semigroup");
    }
    std::size_t const k = x - 1;
    std::size_t const j = k % _index_size;
    std::size_t const r = k / _index_size;
    return Triple{r / _group.order(), static_cast<element_type>(r % _group.order()), j};
  }

  Brandt brandt(GroupTable const& g, std::int64_t index_size, ConstructionLimits const& limits) {
    if (index_size < 2) {
      throw Error(ErrorKind::IndexTooSmall,
                  "the index set needs at least 2 elements, got " + std::to_string(index_size));
    }
    BrandtCoords      coords(g, static_cast<std::size_t>(index_size));
    std::size_t const n = coords.size();
    if (n > limits.max_brandt_size) {
      throw Error(ErrorKind::GroupTooLarge, "B(G, I) would have " + std::to_string(n)
                                                + " elements, above the limit of "
                                                + std::to_string(limits.max_brandt_size));
    }
    std::vector<element_type> table(n * n, 0);
    std::vector<std::string>  labels(n, "0");
    for (element_type a = 1; a < n; ++a) {
      auto const x = *coords.decode(a);
      labels[a]    = "(" + std::to_string(x.i + 1) + "," + g.label(x.g) + ","
                  + std::to_string(x.j + 1) + ")";
      for (element_type b = 1; b < n; ++b) {
        auto const y = *coords.decode(b);
        if (x.j == y.i) {
          table[a * n + b] = coords.encode(x.i, g.product(x.g, y.g), y.j);
        }
      }
    }
    return Brandt{from_flat_table(n, std::move(table), element_type{0}, std::move(labels)),
                  std::move(coords)};
  }

  Brandt b2() {
    return brandt(trivial_group(), 2);
  }

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
    std::size_t const         n = s.size() + 1;
    std::vector<element_type> table(n * n, 0);
    for (element_type a = 1; a < n; ++a) {
      for (element_type b = 1; b < n; ++b) {
        table[a * n + b] = s(a - 1, b - 1) + 1;
      }
    }
    auto old = labels_of(s);
    std::vector<std::string> labels{fresh_label("0", old)};
    labels.insert(labels.end(), old.begin(), old.end());
    return from_flat_table(n, std::move(table), element_type{0}, std::move(labels));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    std::size_t const         m = s.size(), n = m + 1;
    std::vector<element_type> table(n * n);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        table[a * n + b] = a == m ? b : b == m ? a : s(a, b);
      }
    }
    auto labels = labels_of(s);
    labels.push_back(fresh_label("1", labels));
    return from_flat_table(n, std::move(table), s.zero(), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Power-set semigroup
  ////////////////////////////////////////////////////////////////////////

  element_type PowersetCoords::encode(std::uint32_t mask, element_type g) const {
    std::size_t const m = _group.order();
    if (mask == 0 || mask >= (std::uint32_t{1} << m) || g >= m) {
      throw Error(ErrorKind::InvalidArgument, "power-set coordinates out of range");
    }
    return static_cast<element_type>((mask - 1) * m + g);
  }

  std::pair<std::uint32_t, element_type> PowersetCoords::decode(element_type x) const {
    if (x >= size()) {
      throw Error(ErrorKind::InvalidArgument, "not an element of this power-set semigroup");
    }
    std::size_t const m = _group.order();
    return {static_cast<std::uint32_t>(x / m + 1), static_cast<element_type>(x % m)};
  }

  Powerset powerset_semigroup(GroupTable const& g, ConstructionLimits const& limits) {
    std::size_t const m = g.order();
    if (m > limits.max_powerset_group_order) {
      throw Error(ErrorKind::GroupTooLarge,
                  "power-set semigroup needs |G| <= "
                      + std::to_string(limits.max_powerset_group_order) + ", got "
                      + std::to_string(m));
    }
    PowersetCoords    coords(g);
    std::size_t const n = coords.size();
    // translate[g][B] = gB
    std::vector<std::vector<std::uint32_t>> translate(m, std::vector<std::uint32_t>(1u << m, 0));
    for (element_type x = 0; x < m; ++x) {
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        for (element_type b = 0; b < m; ++b) {
          if (mask & (1u << b)) {
            translate[x][mask] |= 1u << g.product(x, b);
          }
        }
      }
    }
    std::vector<element_type> table(n * n);
    std::vector<std::string>  labels(n);
    for (element_type a = 0; a < n; ++a) {
      auto const [am, ag] = coords.decode(a);
      std::string set     = "{";
      for (element_type b = 0; b < m; ++b) {
        if (am & (1u << b)) {
          set += (set.size() > 1 ? "," : "") + g.label(b);
        }
      }
      labels[a] = "(" + set + "}," + g.label(ag) + ")";
      for (element_type b = 0; b < n; ++b) {
        auto const [bm, bg] = coords.decode(b);
        table[a * n + b]    = coords.encode(am | translate[ag][bm], g.product(ag, bg));
      }
    }
    return Powerset{from_flat_table(n, std::move(table), std::nullopt, std::move(labels)),
                    std::move(coords)};
  }

  Homomorphism phi_homomorphism(GroupTable const& g, ConstructionLimits const& limits) {
    std::size_t const m = g.order();
    if (m < 2) {
      throw Error(ErrorKind::GroupTooSmall, "phi needs a group with at least 2 elements");
    }
    auto const ps     = powerset_semigroup(g, limits);
    auto const target = brandt(trivial_group(), static_cast<std::int64_t>(m), limits);
    // the index set of the target is the carrier of G
    std::vector<std::string> labels(target.semigroup.size(), "0");
    for (element_type x = 1; x < target.semigroup.size(); ++x) {
      auto const t = *target.coords.decode(x);
      labels[x]    = "(" + g.label(static_cast<element_type>(t.i)) + ",1,"
                  + g.label(static_cast<element_type>(t.j)) + ")";
    }
    auto const                b = relabel(target.semigroup, std::move(labels));
    std::vector<element_type> map(ps.semigroup.size(), 0);
    for (element_type s = 0; s < map.size(); ++s) {
      auto const [mask, x] = ps.coords.decode(s);
      if (std::popcount(mask) == 1) {
        auto const a = static_cast<element_type>(std::countr_zero(mask));
        map[s]       = target.coords.encode(a, 0, g.product(g.inverse(x), a));
      }
    }
    return Homomorphism(ps.semigroup, b, std::move(map));
  }

  FiniteSemigroup restrict_brandt_to(Brandt const& b, std::vector<std::size_t> const& subset) {
    if (b.coords.group().order() != 1) {
      throw Error(ErrorKind::BadSubset, "restriction needs a trivial structure group");
    }
    std::set<std::size_t> k(subset.begin(), subset.end());
    if (k.size() != 2 || subset.size() != 2 || *k.rbegin() >= b.coords.index_size()) {
      throw Error(ErrorKind::BadSubset, "need exactly two distinct indices of the index set");
    }
    std::vector<element_type> members{b.coords.zero()};
    for (auto i : k) {
      for (auto j : k) {
        members.push_back(b.coords.encode(i, 0, j));
      }
    }
    return subsemigroup(b.semigroup, members);
  }

  ////////////////////////////////////////////////////////////////////////
  // Name mini-language
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class BuiltinParser {
     public:
      BuiltinParser(std::string_view text, ConstructionLimits const& limits)
          : _text(text), _limits(limits) {}

      Builtin parse() {
        auto b = expr();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected trailing input");
        }
        b.name = std::string(_text);
        return b;
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

      bool eat(char c) {
        skip();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!eat(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      std::int64_t number() {
        skip();
        std::size_t const start = _pos;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos || _pos - start > 6) {
          _pos = start;
          fail("expected a number");
        }
        return std::stoll(std::string(_text.substr(start, _pos - start)));
      }

      GroupTable group_of(Builtin const& b) const {
        if (!b.group) {
          fail("expected a group");
        }
        return *b.group;
      }

      static Builtin of_group(GroupTable g) {
        return Builtin{"", g.carrier(), g, std::nullopt};
      }

      Builtin expr() {
        auto left = term();
        while (eat('x')) {
          auto right = term();
          if (left.group && right.group) {
            left = of_group(direct_product(*left.group, *right.group));
          } else {
            left = Builtin{"", direct_product(left.semigroup, right.semigroup), std::nullopt,
                           std::nullopt};
          }
        }
        return left;
      }

      Builtin term() {
        auto b = atom();
        while (eat('^')) {
          auto const k = number();
          if (k == 0) {
            b = Builtin{"", adjoin_zero(b.semigroup), std::nullopt, std::nullopt};
          } else if (k == 1) {
            b = Builtin{"", adjoin_identity(b.semigroup), std::nullopt, std::nullopt};
          } else {
            fail("only ^0 and ^1 are supported");
          }
        }
        return b;
      }

      Builtin atom() {
        skip();
        if (_pos >= _text.size()) {
          fail("unexpected end of input");
        }
        char const c = _text[_pos++];
        switch (c) {
          case 'E': return of_group(trivial_group());
          case 'Z': return of_group(cyclic_group(number()));
          case 'S': {
            if (number() != 3) {
              fail("only S3 is available");
            }
            return of_group(symmetric_group_3());
          }
          case 'B': {
            if (eat('(')) {
              auto const g = group_of(expr());
              expect(',');
              auto const k = number();
              expect(')');
              auto b = brandt(g, k, _limits);
              return Builtin{"", b.semigroup, std::nullopt, b.coords};
            }
            if (number() != 2) {
              fail("expected B2 or B(<group>,<k>)");
            }
            auto b = b2();
            return Builtin{"", b.semigroup, std::nullopt, b.coords};
          }
          case 'P': {
            expect('(');
            auto const g = group_of(expr());
            expect(')');
            return Builtin{"", powerset_semigroup(g, _limits).semigroup, std::nullopt,
                           std::nullopt};
          }
          case '(': {
            auto b = expr();
            expect(')');
            return b;
          }
          default: --_pos; fail(std::string("unexpected '") + c + "'");
        }
      }

      std::string_view          _text;
      ConstructionLimits const& _limits;
      std::size_t               _pos = 0;
    };
  }  // namespace

  Builtin parse_builtin(std::string_view text, ConstructionLimits const& limits) {
    return BuiltinParser(text, limits).parse();
  }

}  // namespace bsg
