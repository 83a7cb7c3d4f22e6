// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bsg/constructions.hpp"
#include "bsg/rewrite.hpp"
#include "bsg/structure.hpp"
#include "bsg/words.hpp"
#include "support.hpp"

using namespace bsg;

namespace {
  struct Outcome {
    bool        ok = true;
    std::string detail;

    void require(bool condition, std::string const& what) {
      if (!condition && ok) {
        ok     = false;
        detail = what;
      }
    }
  };

  struct Criterion {
    int                        number;
    std::string                title;
    double                     seconds_limit;  // 0: no limit
    std::function<Outcome()>   body;
  };

  std::vector<Word> words_over(std::string const& alphabet, std::size_t max_len) {
    std::vector<Word> out;
    for (auto const& w : oracle::all_words(alphabet, max_len)) {
      out.push_back(parse_word(w));
    }
    return out;
  }

  bool holds(FiniteSemigroup const& s, Identity const& id) {
    CheckOptions options;
    options.jobs = 0;
    return identity_holds(s, id, options).holds;
  }

  FiniteSemigroup brandt_of(GroupTable const& g, std::int64_t k) {
    return brandt(g, k).semigroup;
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome trahtman_in_b2() {
    Outcome    o;
    auto const b = b2().semigroup;
    for (auto const& id : trahtman_basis()) {
      auto const v = identity_holds(b, id);
      o.require(v.holds, id.to_string() + " fails");
      o.require(v.evaluations_checked <= 25, id.to_string() + " used too many evaluations");
    }
    return o;
  }

  Outcome theorem_identities() {
    Outcome o;
    struct Case {
      char const* name;
      GroupTable  g;
    };
    for (auto const& c : {Case{"B(Z2,2)", cyclic_group(2)}, Case{"B(Z3,2)", cyclic_group(3)},
                          Case{"B(S3,2)", symmetric_group_3()}}) {
      auto const n = exponent(c.g);
      auto const s = brandt_of(c.g, 2);
      for (auto const& id :
           {exponent_identity(n), reduced_exponent_identity(n), commuting_powers_identity(n)}) {
        o.require(holds(s, id), id.to_string() + " fails in " + c.name);
      }
    }
    for (auto const& c : {Case{"B(Z2,2)", cyclic_group(2)}, Case{"B(Z4,2)", cyclic_group(4)}}) {
      auto const n = exponent(c.g);
      auto const s = brandt_of(c.g, 2);
      for (auto const& w : abelian_positive_basis(n).words) {
        Identity const id(w * w, w);
        o.require(holds(s, id), id.to_string() + " fails in " + c.name);
      }
    }
    return o;
  }

  Outcome lemma1_equivalence() {
    Outcome    o;
    auto const words = words_over("xy", 5);
    auto const b     = b2().semigroup;
    for (auto const& g : {cyclic_group(2), symmetric_group_3()}) {
      auto const s = brandt_of(g, 2);
      for (auto const& l : words) {
        for (auto const& r : words) {
          Identity const id(l, r);
          bool const     left  = holds(s, id);
          bool const     right = holds(g.carrier(), id) && holds(b, id);
          o.require(left == right, "exception: " + id.to_string());
        }
      }
    }
    return o;
  }

  Outcome lemma2() {
    Outcome    o;
    auto const z2 = cyclic_group(2);
    auto const s  = brandt_of(z2, 2);
    std::size_t premises = 0;
    for (auto const& w : words_over("xy", 6)) {
      if (!group_satisfies_w_eq_1(z2, w).holds) {
        continue;
      }
      ++premises;
      o.require(holds(s, Identity(w * w, w)), "exception: " + w.to_string());
    }
    o.require(premises > 0, "no word satisfied the premise");
    return o;
  }

  Outcome powerset() {
    Outcome    o;
    auto const p = powerset_semigroup(cyclic_group(2));
    o.require(p.semigroup.size() == 6, "P(Z2) x Z2 does not have 6 elements");
    o.require(is_associative(p.semigroup), "P(Z2) x Z2 is not associative");
    auto const phi = phi_homomorphism(cyclic_group(2));
    o.require(phi.is_surjective(), "phi is not surjective");
    o.require(phi.target().size() == 5, "phi's target does not have 5 elements");
    o.require(find_isomorphism(phi.target(), b2().semigroup).has_value(), "phi's target is not B2");
    auto const fibers = phi.fiber_sizes();
    auto const zero   = *phi.target().zero();
    for (element_type t = 0; t < fibers.size(); ++t) {
      o.require(fibers[t] == (t == zero ? 2u : 1u), "unexpected fiber size");
    }
    auto const b3 = brandt(trivial_group(), 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        o.require(find_isomorphism(restrict_brandt_to(b3, {i, j}), b2().semigroup).has_value(),
                  "a restriction of B(E,3) is not B2");
      }
    }
    return o;
  }

  std::vector<Word> repeated_corpus() {
    std::vector<Word> out;
    for (auto const& w : oracle::all_words("xyz", 6)) {
      if (oracle::repeated(w)) {
        out.push_back(parse_word(w));
      }
    }
    return out;
  }

  Outcome rewrite_soundness() {
    Outcome    o;
    auto const s = brandt_of(cyclic_group(2), 2);
    for (auto const& w : repeated_corpus()) {
      auto const elim = eliminate_single_occurrences(w, 2);
      auto const dec  = cell_decompose(elim.word, 2);
      for (auto const* t : {&elim.trace, &dec.trace}) {
        o.require(replays(*t), "trace of " + w.to_string() + " does not replay");
        for (auto const& step : t->steps) {
          o.require(step.rule_name == kExpN || step.rule_name == kExpNRed,
                    "trace of " + w.to_string() + " uses " + step.rule_name);
        }
      }
      if (!elim.trace.empty() && !dec.trace.empty()) {
        o.require(elim.trace.steps.back().after == dec.trace.steps.front().before, "traces do not chain");
      }
      o.require(holds(s, Identity(w, dec.form.flatten())),
                w.to_string() + " and its cell form differ in B(Z2,2)");
    }
    return o;
  }

  Outcome regularity_witness() {
    Outcome o;
    for (auto const& [g, n] : {std::pair{cyclic_group(2), std::size_t{2}}, std::pair{cyclic_group(3), std::size_t{3}}}) {
      auto const s = brandt_of(g, 2);
      for (auto const& w : repeated_corpus()) {
        auto const elim = eliminate_single_occurrences(w, n);
        auto const dec  = cell_decompose(elim.word, n);
        auto const h    = dec.form.flatten();
        auto const hs   = star_word(dec.form);
        o.require(holds(s, Identity(h * hs * h, h)), "h h* h != h for " + w.to_string());
        o.require(holds(s, Identity(hs * h * hs, hs)), "h* h h* != h* for " + w.to_string());
      }
    }
    return o;
  }

  Outcome separation() {
    Outcome o;
    struct Case {
      char const*     name;
      FiniteSemigroup s;
      std::size_t     n;
    };
    for (auto const& c : {Case{"B2", b2().semigroup, 2}, Case{"B(Z2,2)", brandt_of(cyclic_group(2), 2), 2},
                          Case{"Z4^0", adjoin_zero(cyclic_group(4).carrier()), 4}}) {
      auto const           zero = find_zero(c.s);
      std::vector<element_type> regular;
      for (element_type z = 0; z < c.s.size(); ++z) {
        if (is_regular(c.s, z)) {
          regular.push_back(z);
        }
      }
      for (auto z : regular) {
        if (z == zero) {
          continue;
        }
        auto const rho = rho_z(c.s, z);
        // compatibility, checked directly
        for (element_type x = 0; x < c.s.size(); ++x) {
          for (element_type y = 0; y < c.s.size(); ++y) {
            if (!rho.related(x, y)) {
              continue;
            }
            for (element_type t = 0; t < c.s.size(); ++t) {
              o.require(rho.related(c.s(x, t), c.s(y, t)) && rho.related(c.s(t, x), c.s(t, y)),
                        std::string("rho_z is not a congruence on ") + c.name);
            }
          }
        }
        auto const q = rho_quotient(c.s, z);
        o.require(classify(q.semigroup).kind != StructureKind::Other,
                  std::string("a quotient of ") + c.name + " classifies as Other");
      }
      for (auto a : regular) {
        for (auto b : regular) {
          if (a == b) {
            continue;
          }
          try {
            auto const r = separate_regular_pair(c.s, a, b, c.n);
            o.require(r.hom(a) != r.hom(b), std::string("a pair is not separated in ") + c.name);
            o.require(r.quotient_class.kind != StructureKind::Other, "separation quotient is Other");
          } catch (Error const& e) {
            o.require(false, std::string("separation failed in ") + c.name + ": " + e.what());
          }
        }
      }
    }
    auto const b = b2().semigroup;
    o.require(rho_z(b, 1).is_equality(), "rho_(1,1,1) on B2 is not the equality");
    o.require(find_isomorphism(rho_quotient(b, 1).semigroup, b).has_value(),
              "B2 / rho_(1,1,1) is not B2");
    return o;
  }

  Outcome classification() {
    Outcome o;
    struct Case {
      char const* name;
      GroupTable  g;
      std::size_t k;
    };
    for (auto const& c : {Case{"E", trivial_group(), 2}, Case{"Z2", cyclic_group(2), 2},
                          Case{"Z3", cyclic_group(3), 3}, Case{"S3", symmetric_group_3(), 2}}) {
      auto const r = classify(brandt_of(c.g, static_cast<std::int64_t>(c.k)));
      o.require(r.kind == StructureKind::Brandt, std::string("B(") + c.name + ") is not Brandt");
      o.require(r.index_size == c.k, std::string("wrong index size for ") + c.name);
      o.require(r.group_part && find_isomorphism(r.group_part->carrier(), c.g.carrier()).has_value(),
                std::string("wrong group part for ") + c.name);
      o.require(r.witness && r.witness->is_bijective(), std::string("bad witness for ") + c.name);
    }
    o.require(classify(cyclic_group(4).carrier()).kind == StructureKind::Group, "Z4 is not a Group");
    o.require(classify(adjoin_zero(cyclic_group(4).carrier())).kind == StructureKind::GroupWithZero,
              "Z4^0 is not a GroupWithZero");
    return o;
  }

  Outcome ln_identities() {
    Outcome    o;
    auto const b = b2().semigroup;
    for (std::size_t n = 1; n <= 4; ++n) {
      o.require(holds(b, ln_identity(n)), "L" + std::to_string(n) + " fails in B2");
    }
    auto const s = parse_builtin("B(Z2xS3,2)").semigroup;
    o.require(s.size() == 49, "B(Z2xS3,2) does not have 49 elements");
    for (std::size_t n = 1; n <= 3; ++n) {
      o.require(holds(s, ln_identity(n)), "L" + std::to_string(n) + " fails in B(Z2xS3,2)");
    }
    return o;
  }

  Outcome corollary() {
    Outcome    o;
    auto const a1 = parse_identity("x^2y^2 = y^2x^2");
    auto const a2 = parse_identity("xyxzx = xzxyx");
    for (auto const& s : {b2().semigroup, brandt_of(cyclic_group(4), 2)}) {
      o.require(holds(s, a1), a1.to_string() + " fails");
      o.require(holds(s, a2), a2.to_string() + " fails");
    }
    auto const trace = derive_bounded(a2, trahtman_basis());
    o.require(trace.has_value(), "no derivation found within the default bounds");
    if (trace) {
      o.require(replays(*trace), "the derivation does not replay");
      o.require(!trace->empty() && trace->steps.front().before == a2.lhs
                    && trace->steps.back().after == a2.rhs,
                "the derivation does not join the two sides");
    }
    return o;
  }

  Outcome mirror_duality() {
    Outcome                                    o;
    auto const                                 s = brandt_of(cyclic_group(2), 2);
    std::mt19937                               rng(12);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<int>         letter(0, 2);
    auto const                                 word = [&] {
      std::string w(len(rng), ' ');
      for (auto& c : w) {
        c = "xyz"[letter(rng)];
      }
      return parse_word(w);
    };
    for (int k = 0; k < 200; ++k) {
      auto const p = word(), q = word();
      bool const a = holds(s, Identity(p, q));
      o.require(a == holds(s, Identity(mirror(p), mirror(q))), "exception: " + p.to_string() + " = " + q.to_string());
    }
    return o;
  }
}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Trahtman basis holds in B2", 1, trahtman_in_b2},
      {2, "exponent, reduced exponent, commuting powers and w^2 = w hold in B(G,2)", 10, theorem_identities},
      {3, "B(G,2) satisfies an identity iff G and B2 do (G = Z2, S3)", 60, lemma1_equivalence},
      {4, "Z2 |= w = 1 implies B(Z2,2) |= w^2 = w", 30, lemma2},
      {5, "power-set semigroup, phi, and restrictions of B(E,3)", 0, powerset},
      {6, "rewrite traces replay and preserve values in B(Z2,2)", 60, rewrite_soundness},
      {7, "h h* h = h and h* h h* = h* in B(Z2,2) and B(Z3,2)", 0, regularity_witness},
      {8, "rho_z quotients and separation of regular pairs", 0, separation},
      {9, "classification round-trip", 0, classification},
      {10, "L_n holds in B2 (n <= 4) and B(Z2xS3,2) (n <= 3)", 120, ln_identities},
      {11, "abelian corollary identities and their derivation", 0, corollary},
      {12, "mirror duality on 200 sampled identities in B(Z2,2)", 0, mirror_duality},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.body();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const elapsed
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.seconds_limit > 0 && elapsed >= c.seconds_limit) {
      o.ok     = false;
      o.detail = "exceeded the time limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
              << timing << ")";
    if (!o.ok) {
      std::cout << " -- " << o.detail;
      ++failed;
    }
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
