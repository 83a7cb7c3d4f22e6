// Property tests over deterministically generated inputs. Random
// semigroups are transformation semigroups generated by a few random maps
// of a small set; they include bands, nilpotent and non-regular examples.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "bsg/constructions.hpp"
#include "bsg/rewrite.hpp"
#include "bsg/structure.hpp"
#include "bsg/words.hpp"
#include "support.hpp"

using namespace bsg;

namespace {
  using Map = std::vector<int>;

  // The semigroup generated by `gens` random self-maps of {0..points-1},
  // composed left to right.
  FiniteSemigroup random_semigroup(std::mt19937& rng, int points, int gens, std::size_t max_size = 40) {
    std::uniform_int_distribution<int> pick(0, points - 1);
    std::vector<Map>                   elems;
    std::map<Map, int>                 index;
    auto                               add = [&](Map const& m) {
      if (index.emplace(m, static_cast<int>(elems.size())).second) {
        elems.push_back(m);
      }
    };
    std::vector<Map> generators;
    for (int g = 0; g < gens; ++g) {
      Map m(points);
      for (auto& v : m) {
        v = pick(rng);
      }
      generators.push_back(m);
      add(m);
    }
    for (std::size_t k = 0; k < elems.size() && elems.size() <= max_size; ++k) {
      for (auto const& g : generators) {
        Map m(points);
        for (int i = 0; i < points; ++i) {
          m[i] = g[elems[k][i]];
        }
        add(m);
      }
    }
    if (elems.size() > max_size) {
      return random_semigroup(rng, points, gens, max_size);
    }
    std::size_t const                      n = elems.size();
    std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Map m(points);
        for (int i = 0; i < points; ++i) {
          m[i] = elems[b][elems[a][i]];
        }
        t[a][b] = index.at(m);
      }
    }
    return from_table(t);
  }

  std::vector<FiniteSemigroup> corpus() {
    std::mt19937                 rng(20240611);
    std::vector<FiniteSemigroup> out;
    for (int k = 0; k < 60; ++k) {
      out.push_back(random_semigroup(rng, 3 + k % 2, 1 + k % 3));
    }
    return out;
  }

  oracle::Table as_table(FiniteSemigroup const& s) {
    oracle::Table t(s.size(), std::vector<int>(s.size()));
    for (element_type a = 0; a < s.size(); ++a) {
      for (element_type b = 0; b < s.size(); ++b) {
        t[a][b] = static_cast<int>(s(a, b));
      }
    }
    return t;
  }

  std::string random_word(std::mt19937& rng, std::string const& alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len), letter(0, alphabet.size() - 1);
    std::string                                w(len(rng), ' ');
    for (auto& c : w) {
      c = alphabet[letter(rng)];
    }
    return w;
  }
}  // namespace

TEST_CASE("ideals, idempotents and quotients on random semigroups", "[properties]") {
  for (auto const& s : corpus()) {
    std::size_t const n = s.size();
    for (element_type u = 0; u < n; ++u) {
      auto const i = principal_ideal(s, u);
      for (auto x : i) {
        for (element_type t = 0; t < n; ++t) {
          CHECK(i.contains(s(t, x)));
          CHECK(i.contains(s(x, t)));
        }
      }
      // regular iff some inverse exists, checked from the definition
      bool has_inverse = false;
      for (element_type b = 0; b < n; ++b) {
        has_inverse = has_inverse || (s(s(u, b), u) == u && s(s(b, u), b) == b);
      }
      CHECK(is_regular(s, u) == has_inverse);
    }
    if (is_inverse_semigroup(s)) {
      auto const e = idempotents(s);
      for (auto a : e) {
        for (auto b : e) {
          CHECK(s(a, b) == s(b, a));
        }
      }
    }
    for (element_type z = 0; z < n; ++z) {
      auto const c = rho_z(s, z);
      auto const q = quotient_by_congruence(s, c);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          CHECK(q.natural(s(x, y)) == q.semigroup(q.natural(x), q.natural(y)));
        }
      }
      auto const ex = excluded_set(s, z);
      if (!ex.empty()) {
        auto const r = rees_quotient(s, ex);
        CHECK(r.semigroup.size() == n - ex.size() + 1);
        CHECK(r.semigroup.zero().has_value());
      }
    }
  }
}

TEST_CASE("classify never fabricates a witness", "[properties]") {
  std::size_t brandt_seen = 0;
  auto        inputs      = corpus();
  for (auto const* name : {"B2", "B(Z2,2)", "B(Z3,3)", "B(S3,2)", "B(Z2xZ2,3)", "Z4^0", "S3", "B2^1", "P(Z2)"}) {
    inputs.push_back(parse_builtin(name).semigroup);
  }
  for (auto const& s : inputs) {
    auto const c = classify(s);
    switch (c.kind) {
      case StructureKind::Group:
        CHECK(is_group(s));
        break;
      case StructureKind::GroupWithZero:
        CHECK(find_zero(s).has_value());
        CHECK(c.group_part->order() + 1 == s.size());
        break;
      case StructureKind::Brandt: {
        ++brandt_seen;
        REQUIRE(c.witness);
        CHECK(c.witness->is_bijective());
        auto const rebuilt = brandt(*c.group_part, static_cast<std::int64_t>(*c.index_size));
        CHECK(c.witness->target() == rebuilt.semigroup);
        break;
      }
      case StructureKind::Other:
        CHECK(!c.witness);
        CHECK(!(is_inverse_semigroup(s) && is_completely_zero_simple(s) && find_zero(s)));
        break;
    }
  }
  CHECK(brandt_seen >= 5);
}

TEST_CASE("identity checks agree with the oracle", "[properties]") {
  std::mt19937 rng(7);
  auto         inputs = corpus();
  inputs.resize(20);
  inputs.push_back(b2().semigroup);
  inputs.push_back(brandt(cyclic_group(2), 2).semigroup);
  for (auto const& s : inputs) {
    auto const t = as_table(s);
    for (int k = 0; k < 15; ++k) {
      auto const l = random_word(rng, "xyz", 5), r = random_word(rng, "xyz", 5);
      auto const v = identity_holds(s, parse_identity(l + "=" + r));
      CHECK(v.holds == oracle::holds(t, l, r));
      if (v.counterexample) {
        // self-check of the reported counterexample
        auto const& ce = *v.counterexample;
        CHECK(ce.lhs_value == evaluate(s, parse_word(l), ce.evaluation));
        CHECK(ce.rhs_value == evaluate(s, parse_word(r), ce.evaluation));
        CHECK(ce.lhs_value != ce.rhs_value);
      }
    }
  }
}

TEST_CASE("evaluation does not depend on bracketing", "[properties]") {
  std::mt19937 rng(11);
  for (auto const& s : corpus()) {
    auto const                                 t = as_table(s);
    std::uniform_int_distribution<element_type> elem(0, static_cast<element_type>(s.size() - 1));
    for (int k = 0; k < 10; ++k) {
      auto const          w = random_word(rng, "xyz", 8);
      std::map<char, int> e{{'x', elem(rng)}, {'y', elem(rng)}, {'z', elem(rng)}};
      Evaluation          ev;
      for (auto [c, v] : e) {
        ev.assignment[std::string(1, c)] = static_cast<element_type>(v);
      }
      CHECK(evaluate(s, parse_word(w), ev) == element_type(oracle::evaluate_right(t, w, e)));
    }
  }
}

TEST_CASE("mirror duality in inverse semigroups", "[properties]") {
  std::mt19937 rng(3);
  for (auto const* name : {"B2", "B(Z2,2)", "B(S3,2)", "Z4^0"}) {
    auto const s = parse_builtin(name).semigroup;
    for (int k = 0; k < 25; ++k) {
      auto const p = parse_word(random_word(rng, "xyz", 5));
      auto const q = parse_word(random_word(rng, "xyz", 5));
      CHECK(identity_holds(s, Identity(p, q)).holds
            == identity_holds(s, Identity(mirror(p), mirror(q))).holds);
    }
  }
}

TEST_CASE("rewriting preserves values and builds inverses", "[properties]") {
  struct Case {
    FiniteSemigroup s;
    std::size_t     n;
  };
  std::vector<Case> cases{{brandt(cyclic_group(2), 2).semigroup, 2}, {brandt(cyclic_group(3), 2).semigroup, 3}};
  for (auto const& c : cases) {
    auto const t = as_table(c.s);
    for (auto const& text : oracle::all_words("xyz", 5)) {
      if (!oracle::repeated(text)) {
        continue;
      }
      auto const w    = parse_word(text);
      auto const elim = eliminate_single_occurrences(w, c.n);
      auto const dec  = cell_decompose(elim.word, c.n);
      CHECK(replays(elim.trace));
      CHECK(replays(dec.trace));
      auto const h  = dec.form.flatten().to_string();
      auto const hs = star_word(dec.form).to_string();
      auto const e  = elim.word.to_string();
      std::size_t failures = 0;
      oracle::for_each_evaluation(static_cast<int>(c.s.size()), oracle::letters(text), [&](auto const& ev) {
        auto const v = oracle::evaluate(t, text, ev);
        failures += oracle::evaluate(t, e, ev) != v;
        failures += oracle::evaluate(t, h, ev) != v;
        failures += oracle::evaluate(t, h + hs + h, ev) != v;
        failures += oracle::evaluate(t, hs + h + hs, ev) != oracle::evaluate(t, hs, ev);
        return true;
      });
      INFO(text);
      CHECK(failures == 0);
    }
  }
}

TEST_CASE("derive_bounded outputs replay", "[properties]") {
  std::vector<Identity> basis{exponent_identity(2), reduced_exponent_identity(2)};
  for (auto const* text : {"x^2 = x^6", "xyx = (xy)^5x", "x^3 = x^5", "x^2y^2 = x^4y^2"}) {
    auto const id = parse_identity(text);
    auto const t  = derive_bounded(id, basis);
    REQUIRE(t);
    CHECK(replays(*t));
    CHECK(t->steps.front().before == id.lhs);
    CHECK(t->steps.back().after == id.rhs);
  }
}
