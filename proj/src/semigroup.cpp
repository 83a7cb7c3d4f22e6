#include "bsg/semigroup.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace bsg {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::InvalidArgument: return "InvalidArgument";
      case ErrorKind::NotSquare: return "NotSquare";
      case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
      case ErrorKind::NonAssociative: return "NonAssociative";
      case ErrorKind::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
      case ErrorKind::NotAGroup: return "NotAGroup";
      case ErrorKind::NotAnIdeal: return "NotAnIdeal";
      case ErrorKind::IncompatiblePartition: return "IncompatiblePartition";
      case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
      case ErrorKind::InvalidOrder: return "InvalidOrder";
      case ErrorKind::IndexTooSmall: return "IndexTooSmall";
      case ErrorKind::GroupTooLarge: return "GroupTooLarge";
      case ErrorKind::GroupTooSmall: return "GroupTooSmall";
      case ErrorKind::BadSubset: return "BadSubset";
      case ErrorKind::SyntaxError: return "SyntaxError";
      case ErrorKind::ZeroPower: return "ZeroPower";
      case ErrorKind::UnassignedVariable: return "UnassignedVariable";
      case ErrorKind::BudgetExceeded: return "BudgetExceeded";
      case ErrorKind::HypothesisViolated: return "HypothesisViolated";
      case ErrorKind::NoValidSplit: return "NoValidSplit";
      case ErrorKind::NotRepeated: return "NotRepeated";
      case ErrorKind::HasSingleOccurrence: return "HasSingleOccurrence";
      case ErrorKind::EmptyStar: return "EmptyStar";
      case ErrorKind::NoMatch: return "NoMatch";
      case ErrorKind::NotRegular: return "NotRegular";
      case ErrorKind::NotDistinct: return "NotDistinct";
      case ErrorKind::HypothesisFails: return "HypothesisFails";
      case ErrorKind::Io: return "Io";
    }
    return "Unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  std::string FiniteSemigroup::label(element_type a) const {
    if (has_labels()) {
      return _data->labels[a];
    }
    return std::to_string(a);
  }

  std::vector<std::string> const& FiniteSemigroup::labels() const noexcept {
    static std::vector<std::string> const none;
    return _data ? _data->labels : none;
  }

  std::vector<std::vector<element_type>> FiniteSemigroup::rows() const {
    std::vector<std::vector<element_type>> out;
    for (element_type a = 0; a < size(); ++a) {
      auto r = row(a);
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }

  bool operator==(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    return s.size() == t.size() && s.zero() == t.zero()
           && std::ranges::equal(s.table(), t.table());
  }

  namespace {
    // First (a, b, c) in lexicographic order with (ab)c != a(bc).
    std::optional<std::array<element_type, 3>>
    associativity_witness(std::size_t n, std::vector<element_type> const& t) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t const ab = t[a * n + b];
          for (std::size_t c = 0; c < n; ++c) {
            if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
              return std::array<element_type, 3>{static_cast<element_type>(a),
                                                 static_cast<element_type>(b),
                                                 static_cast<element_type>(c)};
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  FiniteSemigroup from_flat_table(std::size_t                 size,
                                  std::vector<element_type>   table,
                                  std::optional<element_type> zero,
                                  std::vector<std::string>    labels) {
    if (size == 0) {
      throw Error(ErrorKind::NotSquare, "a semigroup needs at least one element");
    }
    if (table.size() != size * size) {
      throw Error(ErrorKind::NotSquare,
                  "expected " + std::to_string(size * size) + " entries, got "
                      + std::to_string(table.size()));
    }
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k] >= size) {
        throw Error(ErrorKind::EntryOutOfRange,
                    "entry (" + std::to_string(k / size) + ", " + std::to_string(k % size)
                        + ") = " + std::to_string(table[k]) + " is not below "
                        + std::to_string(size));
      }
    }
    if (zero) {
      if (*zero >= size) {
        throw Error(ErrorKind::EntryOutOfRange, "zero index " + std::to_string(*zero));
      }
      for (std::size_t x = 0; x < size; ++x) {
        if (table[*zero * size + x] != *zero || table[x * size + *zero] != *zero) {
          throw Error(ErrorKind::ZeroNotAbsorbing,
                      "element " + std::to_string(*zero) + " does not absorb "
                          + std::to_string(x));
        }
      }
    }
    if (!labels.empty() && labels.size() != size) {
      throw Error(ErrorKind::InvalidArgument, "label count does not match size");
    }
    if (auto w = associativity_witness(size, table)) {
      auto const [a, b, c] = *w;
      throw Error(ErrorKind::NonAssociative,
                  "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c)
                      + " != " + std::to_string(a) + "*(" + std::to_string(b) + "*"
                      + std::to_string(c) + ")",
                  {a, b, c});
    }
    FiniteSemigroup s;
    auto            data = std::make_shared<FiniteSemigroup::Data>();
    data->size           = size;
    data->table          = std::move(table);
    data->zero           = zero;
    data->labels         = std::move(labels);
    s._data              = std::move(data);
    return s;
  }

  FiniteSemigroup from_table(std::vector<std::vector<std::int64_t>> const& raw,
                             std::optional<std::int64_t>                   zero,
                             std::vector<std::string>                      labels) {
    std::size_t const n = raw.size();
    if (n == 0) {
      throw Error(ErrorKind::NotSquare, "empty table");
    }
    std::vector<element_type> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].size() != n) {
        throw Error(ErrorKind::NotSquare,
                    "row " + std::to_string(i) + " has " + std::to_string(raw[i].size())
                        + " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto const v = raw[i][j];
        if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
          throw Error(ErrorKind::EntryOutOfRange,
                      "entry (" + std::to_string(i) + ", " + std::to_string(j)
                          + ") = " + std::to_string(v));
        }
        flat.push_back(static_cast<element_type>(v));
      }
    }
    std::optional<element_type> z;
    if (zero) {
      if (*zero < 0 || static_cast<std::uint64_t>(*zero) >= n) {
        throw Error(ErrorKind::EntryOutOfRange, "zero index " + std::to_string(*zero));
      }
      z = static_cast<element_type>(*zero);
    }
    return from_flat_table(n, std::move(flat), z, std::move(labels));
  }

  FiniteSemigroup relabel(FiniteSemigroup const& s, std::vector<std::string> labels) {
    std::vector<element_type> t(s.table().begin(), s.table().end());
    return from_flat_table(s.size(), std::move(t), s.zero(), std::move(labels));
  }

  FiniteSemigroup with_zero(FiniteSemigroup const& s, element_type zero) {
    std::vector<element_type> t(s.table().begin(), s.table().end());
    return from_flat_table(s.size(), std::move(t), zero, s.labels());
  }

  std::optional<element_type> find_zero(FiniteSemigroup const& s) {
    if (s.zero()) {
      return s.zero();
    }
    for (element_type z = 0; z < s.size(); ++z) {
      bool absorbing = true;
      for (element_type x = 0; x < s.size() && absorbing; ++x) {
        absorbing = s(z, x) == z && s(x, z) == z;
      }
      if (absorbing) {
        return z;
      }
    }
    return std::nullopt;
  }

  bool is_associative(FiniteSemigroup const& s) {
    std::vector<element_type> t(s.table().begin(), s.table().end());
    return !associativity_witness(s.size(), t).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<element_type> find_identity(FiniteSemigroup const& s) {
      for (element_type e = 0; e < s.size(); ++e) {
        bool ok = true;
        for (element_type x = 0; x < s.size() && ok; ++x) {
          ok = s(e, x) == x && s(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    bool is_latin_square(FiniteSemigroup const& s) {
      std::size_t const n = s.size();
      std::vector<char> seen(n);
      for (element_type a = 0; a < n; ++a) {
        std::ranges::fill(seen, 0);
        for (element_type b = 0; b < n; ++b) {
          if (std::exchange(seen[s(a, b)], 1)) {
            return false;
          }
        }
        std::ranges::fill(seen, 0);
        for (element_type b = 0; b < n; ++b) {
          if (std::exchange(seen[s(b, a)], 1)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_group(FiniteSemigroup const& s) {
    return s.size() > 0 && is_latin_square(s) && find_identity(s).has_value();
  }

  GroupTable::GroupTable(FiniteSemigroup carrier) : _carrier(std::move(carrier)) {
    if (_carrier.size() == 0 || !is_latin_square(_carrier)) {
      throw Error(ErrorKind::NotAGroup, "table is not a Latin square");
    }
    auto e = find_identity(_carrier);
    if (!e) {
      throw Error(ErrorKind::NotAGroup, "no identity element");
    }
    _identity = *e;
    _inverse.resize(_carrier.size());
    for (element_type g = 0; g < _carrier.size(); ++g) {
      for (element_type h = 0; h < _carrier.size(); ++h) {
        if (_carrier(g, h) == _identity) {
          _inverse[g] = h;
          break;
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism
  ////////////////////////////////////////////////////////////////////////

  Homomorphism::Homomorphism(FiniteSemigroup           source,
                             FiniteSemigroup           target,
                             std::vector<element_type> map)
      : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {
    if (_map.size() != _source.size()) {
      throw Error(ErrorKind::InvalidArgument, "map size differs from source size");
    }
    for (auto y : _map) {
      if (y >= _target.size()) {
        throw Error(ErrorKind::InvalidArgument, "map image out of range");
      }
    }
    for (element_type x = 0; x < _source.size(); ++x) {
      for (element_type y = 0; y < _source.size(); ++y) {
        if (_map[_source(x, y)] != _target(_map[x], _map[y])) {
          throw Error(ErrorKind::NotAHomomorphism,
                      "map(" + std::to_string(x) + "*" + std::to_string(y)
                          + ") != map(" + std::to_string(x) + ")*map(" + std::to_string(y)
                          + ")",
                      {x, y});
        }
      }
    }
  }

  std::vector<std::size_t> Homomorphism::fiber_sizes() const {
    std::vector<std::size_t> out(_target.size(), 0);
    for (auto y : _map) {
      ++out[y];
    }
    return out;
  }

  bool Homomorphism::is_injective() const {
    auto f = fiber_sizes();
    return std::ranges::all_of(f, [](std::size_t k) { return k <= 1; });
  }

  bool Homomorphism::is_surjective() const {
    auto f = fiber_sizes();
    return std::ranges::all_of(f, [](std::size_t k) { return k >= 1; });
  }

  Homomorphism compose(Homomorphism const& first, Homomorphism const& second) {
    if (!(first.target() == second.source())) {
      throw Error(ErrorKind::InvalidArgument, "homomorphisms are not composable");
    }
    std::vector<element_type> map(first.source().size());
    for (element_type x = 0; x < map.size(); ++x) {
      map[x] = second(first(x));
    }
    return Homomorphism(first.source(), second.target(), std::move(map));
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementSet and Congruence
  ////////////////////////////////////////////////////////////////////////

  ElementSet::ElementSet(FiniteSemigroup const& base, std::vector<element_type> members)
      : _base_size(base.size()), _members(std::move(members)) {
    std::ranges::sort(_members);
    _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    if (!_members.empty() && _members.back() >= _base_size) {
      throw Error(ErrorKind::EntryOutOfRange, "element set member out of range");
    }
    std::vector<char> in(_base_size, 0);
    for (auto m : _members) {
      in[m] = 1;
    }
    _ideal = !_members.empty();
    for (auto m : _members) {
      for (element_type s = 0; s < _base_size && _ideal; ++s) {
        _ideal = in[base(s, m)] && in[base(m, s)];
      }
      if (!_ideal) {
        break;
      }
    }
  }

  bool ElementSet::contains(element_type x) const noexcept {
    return std::ranges::binary_search(_members, x);
  }

  Congruence::Congruence(FiniteSemigroup const& base, std::vector<element_type> class_of) {
    if (class_of.size() != base.size()) {
      throw Error(ErrorKind::InvalidArgument, "class map size differs from semigroup size");
    }
    // renumber classes by first appearance
    _class_of.resize(class_of.size());
    {
      std::vector<element_type> keys = class_of;
      std::ranges::sort(keys);
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      std::vector<element_type> fresh(keys.size(), std::numeric_limits<element_type>::max());
      element_type next = 0;
      for (std::size_t x = 0; x < class_of.size(); ++x) {
        auto k = static_cast<std::size_t>(std::ranges::lower_bound(keys, class_of[x]) - keys.begin());
        if (fresh[k] == std::numeric_limits<element_type>::max()) {
          fresh[k] = next++;
        }
        _class_of[x] = fresh[k];
      }
      _class_count = next;
    }
    // Checking a ~ a' => ab ~ a'b and ba ~ ba' for each a and the first
    // member a' of its class is enough for an equivalence to be a congruence.
    std::vector<element_type> rep(_class_count, std::numeric_limits<element_type>::max());
    for (element_type x = 0; x < base.size(); ++x) {
      if (rep[_class_of[x]] == std::numeric_limits<element_type>::max()) {
        rep[_class_of[x]] = x;
      }
    }
    for (element_type a = 0; a < base.size(); ++a) {
      element_type const r = rep[_class_of[a]];
      if (r == a) {
        continue;
      }
      for (element_type b = 0; b < base.size(); ++b) {
        if (_class_of[base(a, b)] != _class_of[base(r, b)]
            || _class_of[base(b, a)] != _class_of[base(b, r)]) {
          throw Error(ErrorKind::IncompatiblePartition,
                      "elements " + std::to_string(a) + " and " + std::to_string(r)
                          + " are related but their products with " + std::to_string(b)
                          + " are not",
                      {a, r, b});
        }
      }
    }
  }

  Congruence Congruence::equality(FiniteSemigroup const& base) {
    std::vector<element_type> m(base.size());
    std::iota(m.begin(), m.end(), 0);
    return Congruence(base, std::move(m));
  }

  Congruence Congruence::universal(FiniteSemigroup const& base) {
    return Congruence(base, std::vector<element_type>(base.size(), 0));
  }

  std::vector<std::vector<element_type>> Congruence::classes() const {
    std::vector<std::vector<element_type>> out(_class_count);
    for (element_type x = 0; x < _class_of.size(); ++x) {
      out[_class_of[x]].push_back(x);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and element predicates
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Membership vector of S * X * S for a membership vector X.
    std::vector<char> two_sided(FiniteSemigroup const& s, std::vector<char> const& x) {
      std::size_t const n = s.size();
      std::vector<char> right(n, 0);  // X * S
      for (element_type u = 0; u < n; ++u) {
        if (x[u]) {
          for (auto v : s.row(u)) {
            right[v] = 1;
          }
        }
      }
      std::vector<char> out(n, 0);  // S * (X * S)
      for (element_type a = 0; a < n; ++a) {
        for (element_type v = 0; v < n; ++v) {
          if (right[v]) {
            out[s(a, v)] = 1;
          }
        }
      }
      return out;
    }

    std::vector<element_type> members_of(std::vector<char> const& in) {
      std::vector<element_type> out;
      for (element_type x = 0; x < in.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }
  }  // namespace

  ElementSet principal_ideal(FiniteSemigroup const& s, element_type u) {
    std::vector<char> x(s.size(), 0);
    x[u] = 1;
    return ElementSet(s, members_of(two_sided(s, x)));
  }

  ElementSet ideal_generated_by(FiniteSemigroup const& s, element_type u) {
    std::vector<char> in = [&] {
      std::vector<char> x(s.size(), 0);
      x[u] = 1;
      return two_sided(s, x);
    }();
    in[u] = 1;
    for (element_type t = 0; t < s.size(); ++t) {
      in[s(u, t)] = 1;
      in[s(t, u)] = 1;
    }
    return ElementSet(s, members_of(in));
  }

  ElementSet idempotents(FiniteSemigroup const& s) {
    std::vector<element_type> out;
    for (element_type e = 0; e < s.size(); ++e) {
      if (s(e, e) == e) {
        out.push_back(e);
      }
    }
    return ElementSet(s, std::move(out));
  }

  ElementSet inverses_of(FiniteSemigroup const& s, element_type a) {
    std::vector<element_type> out;
    for (element_type b = 0; b < s.size(); ++b) {
      if (s(s(a, b), a) == a && s(s(b, a), b) == b) {
        out.push_back(b);
      }
    }
    return ElementSet(s, std::move(out));
  }

  bool is_regular(FiniteSemigroup const& s, element_type a) {
    for (element_type b = 0; b < s.size(); ++b) {
      if (s(s(a, b), a) == a && s(s(b, a), b) == b) {
        return true;
      }
    }
    return false;
  }

  bool is_inverse_semigroup(FiniteSemigroup const& s) {
    for (element_type a = 0; a < s.size(); ++a) {
      if (inverses_of(s, a).size() != 1) {
        return false;
      }
    }
    return s.size() > 0;
  }

  bool is_zero_simple(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    if (n < 2) {
      return false;
    }
    std::vector<char> square(n, 0);
    for (auto v : s.table()) {
      square[v] = 1;
    }
    if (std::ranges::find(square, 0) != square.end()) {
      return false;
    }
    auto const zero = find_zero(s);
    for (element_type u = 0; u < n; ++u) {
      if (u == zero) {
        continue;
      }
      std::vector<char> x(n, 0);
      x[u]          = 1;
      auto const in = two_sided(s, x);
      for (element_type v = 0; v < n; ++v) {
        if (v != zero && !in[v]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_completely_zero_simple(FiniteSemigroup const& s) {
    if (!is_zero_simple(s)) {
      return false;
    }
    auto const zero = find_zero(s);
    auto const ids  = idempotents(s);
    for (auto e : ids) {
      if (e == zero) {
        continue;
      }
      bool primitive = true;
      for (auto f : ids) {
        if (f != e && f != zero && s(e, f) == f && s(f, e) == f) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients and products
  ////////////////////////////////////////////////////////////////////////

  Quotient rees_quotient(FiniteSemigroup const& s, ElementSet const& ideal) {
    if (ideal.base_size() != s.size() || !ideal.is_ideal()) {
      throw Error(ErrorKind::NotAnIdeal, "the set is not a nonempty ideal of the semigroup");
    }
    std::size_t const         m = s.size() - ideal.size() + 1;
    std::vector<element_type> map(s.size(), 0);
    std::vector<element_type> rep{ideal.members().front()};
    for (element_type x = 0; x < s.size(); ++x) {
      if (!ideal.contains(x)) {
        map[x] = static_cast<element_type>(rep.size());
        rep.push_back(x);
      }
    }
    std::vector<element_type> table(m * m, 0);
    for (element_type a = 1; a < m; ++a) {
      for (element_type b = 1; b < m; ++b) {
        table[a * m + b] = map[s(rep[a], rep[b])];
      }
    }
    std::vector<std::string> labels;
    if (s.has_labels()) {
      for (auto r : rep) {
        labels.push_back(s.label(r));
      }
    }
    auto q = from_flat_table(m, std::move(table), element_type{0}, std::move(labels));
    return Quotient{q, Homomorphism(s, q, std::move(map))};
  }

  Quotient quotient_by_congruence(FiniteSemigroup const& s, Congruence const& c) {
    if (c.base_size() != s.size()) {
      throw Error(ErrorKind::IncompatiblePartition, "congruence is over a different semigroup");
    }
    std::size_t const         m = c.class_count();
    std::vector<element_type> rep(m, std::numeric_limits<element_type>::max());
    for (element_type x = 0; x < s.size(); ++x) {
      if (rep[c.class_of(x)] == std::numeric_limits<element_type>::max()) {
        rep[c.class_of(x)] = x;
      }
    }
    std::vector<element_type> table(m * m);
    for (element_type a = 0; a < m; ++a) {
      for (element_type b = 0; b < m; ++b) {
        table[a * m + b] = c.class_of(s(rep[a], rep[b]));
      }
    }
    std::optional<element_type> zero;
    if (auto z = find_zero(s)) {
      zero = c.class_of(*z);
    }
    std::vector<std::string> labels;
    if (s.has_labels()) {
      for (auto r : rep) {
        labels.push_back(s.label(r));
      }
    }
    auto q = from_flat_table(m, std::move(table), zero, std::move(labels));
    return Quotient{q, Homomorphism(s, q, c.class_map())};
  }

  FiniteSemigroup subsemigroup(FiniteSemigroup const& s, std::vector<element_type> const& members) {
    std::vector<element_type> sorted = members;
    std::ranges::sort(sorted);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || sorted.back() >= s.size()) {
      throw Error(ErrorKind::InvalidArgument, "subsemigroup members out of range");
    }
    std::vector<element_type> index(s.size(), std::numeric_limits<element_type>::max());
    for (element_type k = 0; k < sorted.size(); ++k) {
      index[sorted[k]] = k;
    }
    std::size_t const         m = sorted.size();
    std::vector<element_type> table(m * m);
    for (element_type a = 0; a < m; ++a) {
      for (element_type b = 0; b < m; ++b) {
        auto const p = index[s(sorted[a], sorted[b])];
        if (p == std::numeric_limits<element_type>::max()) {
          throw Error(ErrorKind::InvalidArgument, "subset is not closed under multiplication");
        }
        table[a * m + b] = p;
      }
    }
    std::optional<element_type> zero;
    if (s.zero() && index[*s.zero()] != std::numeric_limits<element_type>::max()) {
      zero = index[*s.zero()];
    }
    std::vector<std::string> labels;
    if (s.has_labels()) {
      for (auto x : sorted) {
        labels.push_back(s.label(x));
      }
    }
    return from_flat_table(m, std::move(table), zero, std::move(labels));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    std::size_t const         ns = s.size(), nt = t.size(), n = ns * nt;
    std::vector<element_type> table(n * n);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<element_type>(s(a / nt, b / nt) * nt + t(a % nt, b % nt));
      }
    }
    std::vector<std::string> labels;
    if (s.has_labels() || t.has_labels()) {
      for (element_type a = 0; a < n; ++a) {
        labels.push_back("(" + s.label(a / nt) + "," + t.label(a % nt) + ")");
      }
    }
    return from_flat_table(n, std::move(table), std::nullopt, std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Fingerprint = std::vector<std::uint64_t>;

    Fingerprint fingerprint(FiniteSemigroup const& s, element_type x) {
      std::size_t const n = s.size();
      // index and period of the monogenic subsemigroup generated by x
      std::vector<std::size_t> first_seen(n, 0);
      std::size_t              index = 0, period = 0;
      element_type             p     = x;
      for (std::size_t k = 1;; ++k) {
        if (first_seen[p] != 0) {
          index  = first_seen[p];
          period = k - first_seen[p];
          break;
        }
        first_seen[p] = k;
        p             = s(p, x);
      }
      std::uint64_t left_id = 0, right_id = 0, left_fix = 0, right_fix = 0, roots = 0,
                    inverses = 0;
      std::vector<char> xs(n, 0), sx(n, 0);
      for (element_type y = 0; y < n; ++y) {
        left_id += s(x, y) == y;
        right_id += s(y, x) == y;
        left_fix += s(x, y) == x;
        right_fix += s(y, x) == x;
        roots += s(y, y) == x;
        inverses += s(s(x, y), x) == x && s(s(y, x), y) == y;
        xs[s(x, y)] = 1;
        sx[s(y, x)] = 1;
      }
      auto const count = [](std::vector<char> const& v) {
        return static_cast<std::uint64_t>(std::ranges::count(v, 1));
      };
      return {index,    period,   left_id,   right_id,  left_fix,
              right_fix, roots,   inverses,  count(xs), count(sx)};
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& s, FiniteSemigroup const& t) : _s(s), _t(t) {
        std::size_t const n = s.size();
        _fs.reserve(n);
        _ft.reserve(n);
        for (element_type x = 0; x < n; ++x) {
          _fs.push_back(fingerprint(s, x));
          _ft.push_back(fingerprint(t, x));
        }
        _f.assign(n, UNDEF);
        _g.assign(n, UNDEF);
        std::vector<std::size_t> candidates(n, 0);
        for (element_type x = 0; x < n; ++x) {
          for (element_type y = 0; y < n; ++y) {
            candidates[x] += _fs[x] == _ft[y];
          }
        }
        _order.resize(n);
        std::iota(_order.begin(), _order.end(), 0);
        std::ranges::stable_sort(_order, {}, [&](element_type x) { return candidates[x]; });
      }

      bool invariants_agree() const {
        auto a = _fs, b = _ft;
        std::ranges::sort(a);
        std::ranges::sort(b);
        return a == b;
      }

      std::optional<std::vector<element_type>> run() {
        if (search(0)) {
          return _f;
        }
        return std::nullopt;
      }

     private:
      static constexpr element_type UNDEF = std::numeric_limits<element_type>::max();

      bool assign(element_type x, element_type y) {
        if (_f[x] != UNDEF) {
          return _f[x] == y;
        }
        if (_g[y] != UNDEF || _fs[x] != _ft[y]) {
          return false;
        }
        _f[x] = y;
        _g[y] = x;
        _assigned.push_back(x);
        return true;
      }

      // Forces f(ab) = f(a)f(b) for every assigned pair until a fixpoint.
      bool propagate(std::size_t from) {
        for (std::size_t i = from; i < _assigned.size(); ++i) {
          element_type const x = _assigned[i];
          for (std::size_t j = 0; j <= i; ++j) {
            element_type const a = _assigned[j];
            if (!assign(_s(x, a), _t(_f[x], _f[a])) || !assign(_s(a, x), _t(_f[a], _f[x]))) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_assigned.size() > mark) {
          element_type const x = _assigned.back();
          _g[_f[x]]            = UNDEF;
          _f[x]                = UNDEF;
          _assigned.pop_back();
        }
      }

      bool search(std::size_t pos) {
        while (pos < _order.size() && _f[_order[pos]] != UNDEF) {
          ++pos;
        }
        if (pos == _order.size()) {
          return true;
        }
        element_type const x = _order[pos];
        for (element_type y = 0; y < _t.size(); ++y) {
          std::size_t const mark = _assigned.size();
          if (assign(x, y) && propagate(mark) && search(pos + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      FiniteSemigroup const&    _s;
      FiniteSemigroup const&    _t;
      std::vector<Fingerprint>  _fs, _ft;
      std::vector<element_type> _f, _g, _order, _assigned;
    };
  }  // namespace

  std::optional<std::vector<element_type>> find_isomorphism(FiniteSemigroup const& s,
                                                            FiniteSemigroup const& t) {
    if (s.size() != t.size()) {
      return std::nullopt;
    }
    IsoSearch search(s, t);
    if (!search.invariants_agree()) {
      return std::nullopt;
    }
    return search.run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Table files
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string trim(std::string const& s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    [[noreturn]] void bad_line(std::size_t line, std::string const& what) {
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what, {line});
    }
  }  // namespace

  FiniteSemigroup read_table(std::istream& in) {
    std::optional<std::size_t>               n;
    std::optional<std::int64_t>              zero;
    std::vector<std::vector<std::int64_t>>   rows;
    std::vector<std::pair<std::size_t, std::string>> labels;
    std::string                              raw;
    std::size_t                              lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string const line = trim(raw);
      if (line.empty() || line.front() == '#') {
        continue;
      }
      std::istringstream ss(line);
      if (!n) {
        std::string key;
        long long   v = 0;
        if (!(ss >> key >> v) || key != "n" || v <= 0) {
          bad_line(lineno, "expected `n <size>`");
        }
        n = static_cast<std::size_t>(v);
        continue;
      }
      if (line.rfind("zero", 0) == 0) {
        std::string key;
        long long   v = 0;
        if (!rows.empty() || zero || !(ss >> key >> v)) {
          bad_line(lineno, "misplaced or malformed `zero` line");
        }
        zero = v;
        continue;
      }
      if (line.rfind("label", 0) == 0) {
        std::string key;
        long long   v = 0;
        if (rows.size() != *n || !(ss >> key >> v) || v < 0 || static_cast<std::size_t>(v) >= *n) {
          bad_line(lineno, "misplaced or malformed `label` line");
        }
        std::string rest;
        std::getline(ss, rest);
        labels.emplace_back(static_cast<std::size_t>(v), trim(rest));
        continue;
      }
      if (rows.size() == *n) {
        bad_line(lineno, "too many table rows");
      }
      std::vector<std::int64_t> row;
      long long                 v = 0;
      while (ss >> v) {
        row.push_back(v);
      }
      if (!ss.eof()) {
        bad_line(lineno, "non-numeric table entry");
      }
      rows.push_back(std::move(row));
    }
    if (!n) {
      throw Error(ErrorKind::SyntaxError, "missing `n <size>` header");
    }
    if (rows.size() != *n) {
      throw Error(ErrorKind::NotSquare,
                  "expected " + std::to_string(*n) + " rows, got " + std::to_string(rows.size()));
    }
    std::vector<std::string> names;
    if (!labels.empty()) {
      names.resize(*n);
      for (std::size_t k = 0; k < *n; ++k) {
        names[k] = std::to_string(k);
      }
      for (auto& [k, s] : labels) {
        names[k] = s;
      }
    }
    return from_table(rows, zero, std::move(names));
  }

  void write_table(std::ostream& out, FiniteSemigroup const& s) {
    out << "n " << s.size() << '\n';
    if (s.zero()) {
      out << "zero " << *s.zero() << '\n';
    }
    for (element_type a = 0; a < s.size(); ++a) {
      auto r = s.row(a);
      for (std::size_t b = 0; b < r.size(); ++b) {
        out << (b == 0 ? "" : " ") << r[b];
      }
      out << '\n';
    }
    if (s.has_labels()) {
      for (element_type a = 0; a < s.size(); ++a) {
        out << "label " << a << ' ' << s.label(a) << '\n';
      }
    }
  }

  FiniteSemigroup load_table_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::Io, "cannot open " + path);
    }
    return read_table(in);
  }

  void save_table_file(std::string const& path, FiniteSemigroup const& s) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorKind::Io, "cannot write " + path);
    }
    write_table(out, s);
  }

}  // namespace bsg
