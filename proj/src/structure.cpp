#include "bsg/structure.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "bsg/constructions.hpp"

namespace bsg {

  std::string_view to_string(StructureKind kind) noexcept {
    switch (kind) {
      case StructureKind::Group: return "Group";
      case StructureKind::GroupWithZero: return "GroupWithZero";
      case StructureKind::Brandt: return "Brandt";
      case StructureKind::Other: return "Other";
    }
    return "Other";
  }

  std::string StructureClass::report() const {
    std::string out = "kind=" + std::string(to_string(kind));
    out += " |Q|=" + (group_part ? std::to_string(group_part->order()) : std::string("-"));
    out += " |J|=" + (index_size ? std::to_string(*index_size) : std::string("-"));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<StructureClass> as_group_with_zero(FiniteSemigroup const& t) {
      auto const zero = find_zero(t);
      if (!zero) {
        return std::nullopt;
      }
      std::vector<element_type> rest;
      for (element_type x = 0; x < t.size(); ++x) {
        if (x != *zero) {
          rest.push_back(x);
        }
      }
      for (auto x : rest) {
        for (auto y : rest) {
          if (t(x, y) == *zero) {
            return std::nullopt;
          }
        }
      }
      auto sub = subsemigroup(t, rest);
      if (!is_group(sub)) {
        return std::nullopt;
      }
      return StructureClass{StructureKind::GroupWithZero, GroupTable(sub), 1, std::nullopt};
    }

    std::optional<StructureClass> as_brandt(FiniteSemigroup const& t) {
      auto const zero = find_zero(t);
      if (!zero || !is_inverse_semigroup(t) || !is_completely_zero_simple(t)) {
        return std::nullopt;
      }
      std::size_t const         n = t.size();
      std::vector<element_type> units;  // nonzero idempotents f_1 < f_2 < ...
      for (auto e : idempotents(t)) {
        if (e != *zero) {
          units.push_back(e);
        }
      }
      std::size_t const k = units.size();
      if (k < 2) {
        return std::nullopt;
      }
      element_type const f1 = units.front();

      std::vector<element_type> inv(n);
      for (element_type x = 0; x < n; ++x) {
        inv[x] = inverses_of(t, x).members().front();
      }
      std::vector<std::size_t> pos(n, k);
      for (std::size_t j = 0; j < k; ++j) {
        pos[units[j]] = j;
      }
      auto const left  = [&](element_type x) { return pos[t(x, inv[x])]; };
      auto const right = [&](element_type x) { return pos[t(inv[x], x)]; };

      std::vector<element_type> local;  // f_1 T f_1 \ {0}
      for (element_type x = 0; x < n; ++x) {
        if (x != *zero && t(f1, x) == x && t(x, f1) == x) {
          local.push_back(x);
        }
      }
      std::optional<GroupTable> q;
      try {
        auto const               sub = subsemigroup(t, local);
        std::vector<std::string> names(sub.size());
        for (element_type g = 0, k = 1; g < sub.size(); ++g) {
          names[g] = local[g] == f1 ? "1" : "q" + std::to_string(k++);
        }
        q.emplace(relabel(sub, std::move(names)));
      } catch (Error const&) {
        return std::nullopt;
      }

      // connecting elements: q_j q_j' = f_1 and q_j' q_j = f_j
      std::vector<element_type> connect(k, *zero);
      for (element_type x = n; x-- > 0;) {
        if (x != *zero && left(x) == 0) {
          connect[right(x)] = x;
        }
      }
      if (std::ranges::find(connect, *zero) != connect.end()) {
        return std::nullopt;
      }

      ConstructionLimits unbounded;
      unbounded.max_brandt_size = std::numeric_limits<std::size_t>::max();
      auto const                target = brandt(*q, static_cast<std::int64_t>(k), unbounded);
      std::vector<element_type> map(n, target.coords.zero());
      for (element_type x = 0; x < n; ++x) {
        if (x == *zero) {
          continue;
        }
        std::size_t const  i = left(x), j = right(x);
        element_type const g = t(t(connect[i], x), inv[connect[j]]);
        auto const         it = std::ranges::lower_bound(local, g);
        if (it == local.end() || *it != g) {
          return std::nullopt;
        }
        map[x] = target.coords.encode(i, static_cast<element_type>(it - local.begin()), j);
      }
      try {
        Homomorphism witness(t, target.semigroup, std::move(map));
        if (!witness.is_bijective()) {
          return std::nullopt;
        }
        return StructureClass{StructureKind::Brandt, std::move(q), k, std::move(witness)};
      } catch (Error const&) {
        return std::nullopt;
      }
    }
  }  // namespace

  StructureClass classify(FiniteSemigroup const& t) {
    if (t.size() == 0) {
      return {};
    }
    if (is_group(t)) {
      return StructureClass{StructureKind::Group, GroupTable(t), 1, std::nullopt};
    }
    if (auto c = as_group_with_zero(t)) {
      return std::move(*c);
    }
    if (auto c = as_brandt(t)) {
      return std::move(*c);
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // I_z and rho_z
  ////////////////////////////////////////////////////////////////////////

  ElementSet excluded_set(FiniteSemigroup const& s, element_type z) {
    if (z >= s.size()) {
      throw Error(ErrorKind::InvalidArgument, "element out of range");
    }
    std::vector<element_type> out;
    for (element_type u = 0; u < s.size(); ++u) {
      if (!principal_ideal(s, u).contains(z)) {
        out.push_back(u);
      }
    }
    if (is_regular(s, z) && std::ranges::binary_search(out, z)) {
      throw Error(ErrorKind::InvalidArgument, "internal error: a regular z lies in I_z");
    }
    return ElementSet(s, std::move(out));
  }

  Congruence rho_z(FiniteSemigroup const& s, element_type z) {
    auto const excluded = excluded_set(s, z);
    auto const probes   = principal_ideal(s, z);
    auto const outside  = static_cast<element_type>(s.size());
    std::map<std::vector<element_type>, element_type> seen;
    std::vector<element_type>                         class_of(s.size());
    for (element_type x = 0; x < s.size(); ++x) {
      std::vector<element_type> key;
      key.reserve(probes.size());
      for (auto t : probes) {
        auto const xt = s(x, t);
        key.push_back(excluded.contains(xt) ? outside : xt);
      }
      auto [it, fresh] = seen.emplace(std::move(key), static_cast<element_type>(seen.size()));
      class_of[x]      = it->second;
    }
    return Congruence(s, std::move(class_of));
  }

  Quotient rho_quotient(FiniteSemigroup const& s, element_type z) {
    auto const excluded = excluded_set(s, z);
    auto const zero     = find_zero(s);
    bool const trivial
        = excluded.empty() || (excluded.size() == 1 && zero && excluded.members().front() == *zero);
    if (trivial) {
      return quotient_by_congruence(s, rho_z(s, z));
    }
    auto const reduced = rees_quotient(s, excluded);
    auto const inner
        = quotient_by_congruence(reduced.semigroup, rho_z(reduced.semigroup, reduced.natural(z)));
    return Quotient{inner.semigroup, compose(reduced.natural, inner.natural)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Separation and ideals
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_hypothesis(FiniteSemigroup const& s, std::size_t n, CheckOptions const& options) {
      for (auto const& id : {reduced_exponent_identity(n), commuting_powers_identity(n)}) {
        auto const v = identity_holds(s, id, options);
        if (!v.holds) {
          throw Error(ErrorKind::HypothesisFails,
                      id.to_string() + " fails: " + describe(s, *v.counterexample));
        }
      }
    }
  }  // namespace

  SeparationResult separate_regular_pair(FiniteSemigroup const& s,
                                         element_type           a,
                                         element_type           b,
                                         std::size_t            n,
                                         CheckOptions const&    options) {
    if (a >= s.size() || b >= s.size()) {
      throw Error(ErrorKind::InvalidArgument, "element out of range");
    }
    if (a == b) {
      throw Error(ErrorKind::NotDistinct, "a and b coincide");
    }
    for (auto x : {a, b}) {
      if (!is_regular(s, x)) {
        throw Error(ErrorKind::NotRegular, s.label(x) + " is not regular");
      }
    }
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    require_hypothesis(s, n, options);
    for (auto z : {a, b}) {
      auto q = rho_quotient(s, z);
      if (q.natural(a) == q.natural(b)) {
        continue;
      }
      auto c = classify(q.semigroup);
      if (c.kind == StructureKind::Other) {
        continue;
      }
      return SeparationResult{z, std::move(q.natural), std::move(c)};
    }
    throw Error(ErrorKind::HypothesisFails,
                "neither rho_a nor rho_b separates " + s.label(a) + " and " + s.label(b));
  }

  std::vector<ElementSet> zero_minimal_ideals(FiniteSemigroup const& s) {
    auto const              zero = find_zero(s);
    std::vector<ElementSet> out;
    for (element_type u = 0; u < s.size(); ++u) {
      if (u == zero) {
        continue;
      }
      auto const ideal   = ideal_generated_by(s, u);
      bool       minimal = true;
      for (auto v : ideal) {
        if (v != zero && ideal_generated_by(s, v) != ideal) {
          minimal = false;
          break;
        }
      }
      if (minimal && std::ranges::find(out, ideal) == out.end()) {
        out.push_back(ideal);
      }
    }
    std::ranges::sort(out, {}, &ElementSet::members);
    return out;
  }

  bool Lemma4Report::holds() const {
    return std::ranges::all_of(ideals, [](IdealReport const& r) {
      return !r.has_regular || (r.inverse && r.completely_zero_simple);
    });
  }

  std::string Lemma4Report::to_string(FiniteSemigroup const& s) const {
    std::string out;
    for (auto const& r : ideals) {
      out += "ideal {";
      for (auto x : r.ideal) {
        out += (x == r.ideal.members().front() ? "" : ",") + s.label(x);
      }
      out += "} regular=" + std::string(r.has_regular ? "yes" : "no");
      out += " inverse=" + std::string(r.inverse ? "yes" : "no");
      out += " completely_0_simple=" + std::string(r.completely_zero_simple ? "yes" : "no");
      out += " " + r.structure.report() + "\n";
    }
    return out;
  }

  Lemma4Report verify_lemma4(FiniteSemigroup const& s, std::size_t n, CheckOptions const& options) {
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    require_hypothesis(s, n, options);
    auto const   zero = find_zero(s);
    Lemma4Report report;
    for (auto& ideal : zero_minimal_ideals(s)) {
      bool const regular = std::ranges::any_of(
          ideal, [&](element_type x) { return x != zero && is_regular(s, x); });
      auto const sub = subsemigroup(s, ideal.members());
      report.ideals.push_back(IdealReport{std::move(ideal), regular, is_inverse_semigroup(sub),
                                          is_completely_zero_simple(sub), classify(sub)});
    }
    return report;
  }

}  // namespace bsg
