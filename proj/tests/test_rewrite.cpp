#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bsg/rewrite.hpp"
#include "support.hpp"

using namespace bsg;

namespace {
  Word w(char const* text) {
    return parse_word(text);
  }

  CellForm form(std::vector<std::pair<std::string, std::string>> cells, std::size_t n) {
    CellForm f;
    f.exponent_n = n;
    for (auto& [h, b] : cells) {
      f.cells.push_back({h, b.empty() ? Word{} : parse_word(b)});
    }
    return f;
  }
}  // namespace

TEST_CASE("apply_rule_at", "[rewrite]") {
  CHECK(apply_rule_at(w("xyxyxyx"), reduced_exponent_identity(2), 0, {{"x", w("x")}, {"y", w("y")}},
                      RuleDirection::RightToLeft)
        == w("xyx"));
  CHECK(apply_rule_at(w("xx"), exponent_identity(2), 0, {{"x", w("x")}}, RuleDirection::LeftToRight)
        == w("x^4"));
  CHECK(apply_rule_at(w("zxxz"), exponent_identity(2), 1, {{"x", w("x")}}, RuleDirection::LeftToRight)
        == w("zx^4z"));
  CHECK(apply_rule_at(w("abab"), exponent_identity(1), 0, {{"x", w("ab")}}, RuleDirection::LeftToRight)
        == w("(ab)^3"));
  CHECK_THROWS_KIND(apply_rule_at(w("xy"), exponent_identity(2), 0, {{"x", w("x")}},
                                  RuleDirection::LeftToRight),
                    ErrorKind::NoMatch);
  CHECK_THROWS_KIND(apply_rule_at(w("xx"), exponent_identity(2), 1, {{"x", w("x")}},
                                  RuleDirection::LeftToRight),
                    ErrorKind::NoMatch);
  CHECK_THROWS_KIND(apply_rule_at(w("xx"), exponent_identity(2), 0, {}, RuleDirection::LeftToRight),
                    ErrorKind::NoMatch);
  CHECK_THROWS_KIND(apply_rule_at(w("xx"), exponent_identity(2), 0, {{"x", Word{}}},
                                  RuleDirection::LeftToRight),
                    ErrorKind::NoMatch);
}

TEST_CASE("eliminating single occurrences", "[rewrite]") {
  auto const a = eliminate_single_occurrences(w("xyx"), 2);
  CHECK(a.word == w("xyxyxyx"));
  REQUIRE(a.trace.steps.size() == 1);
  CHECK(a.trace.steps[0].rule_name == kExpNRed);
  CHECK(a.trace.steps[0].position == 0);

  auto const b = eliminate_single_occurrences(w("xx"), 2);
  CHECK(b.word == w("xx"));
  CHECK(b.trace.empty());

  auto const c = eliminate_single_occurrences(w("xyzx"), 1);
  CHECK(c.word == w("xyzxyzx"));
  CHECK(c.trace.steps.size() == 1);

  // the nearest flanking pair is chosen: y is enclosed by both x..x and z..z
  auto const d = eliminate_single_occurrences(w("xzyzx"), 2);
  CHECK(d.trace.steps.size() == 1);
  CHECK(d.trace.steps[0].position == 1);
  CHECK(d.word == w("x(zy)^3zx"));

  CHECK_THROWS_KIND(eliminate_single_occurrences(w("xyz"), 2), ErrorKind::NotRepeated);
  CHECK_THROWS_KIND(eliminate_single_occurrences(w("xx"), 0), ErrorKind::InvalidArgument);
}

TEST_CASE("cell decomposition", "[rewrite]") {
  auto const a = cell_decompose(w("xyxy"), 2);
  CHECK(a.form.cells == form({{"x", "yxy"}, {"y", "x"}}, 2).cells);
  CHECK(a.form.flatten() == w("xyxyxyxy"));
  CHECK(a.form.to_string() == "(x,yxy)(y,x)");
  CHECK(a.trace.to_string() == "step 1: xyxy --[EXP_N_RED,LR,1]--> xyxyxyxy\n");
  CHECK(replays(a.trace));

  auto const b = cell_decompose(w("xx"), 2);
  CHECK(b.form.cells == form({{"x", ""}}, 2).cells);
  CHECK(b.form.to_string() == "(x,)");

  auto const c = cell_decompose(w("xxyy"), 2);
  CHECK(c.form.cells == form({{"x", ""}, {"y", ""}}, 2).cells);
  CHECK(c.trace.empty());

  CHECK_THROWS_KIND(cell_decompose(w("xyx"), 2), ErrorKind::HasSingleOccurrence);
  CHECK_THROWS_KIND(cell_decompose(w("xx"), 0), ErrorKind::InvalidArgument);
}

TEST_CASE("cell decomposition of a head found in an earlier body", "[rewrite]") {
  // z recurs only inside the first body, and cell (y, ...) sits in between
  auto const d = cell_decompose(w("xzxyyz"), 2);
  CHECK(replays(d.trace));
  CHECK(d.trace.steps.back().after == d.form.flatten());
  std::set<std::string> heads;
  for (auto const& cell : d.form.cells) {
    CHECK(heads.insert(cell.head).second);
  }
  CHECK(d.form.to_string() == "(x,zxyyz)(y,)(z,xyy)");
  CHECK(d.form.flatten() == w("xzxyyzxyyzxyyz"));
}

TEST_CASE("star words", "[rewrite]") {
  CHECK(star_word(form({{"x", ""}}, 2)) == w("xx"));
  CHECK(star_word(form({{"x", "y"}}, 2)) == w("yxyxy"));
  CHECK(star_word(form({{"x", "yxy"}, {"y", "x"}}, 2)) == w("xyxyxyxyxyxyxyxy"));
  CHECK(star_word(form({{"x", "y"}}, 1)) == w("y"));
  CHECK_THROWS_KIND(star_word(form({{"x", ""}, {"y", ""}}, 1)), ErrorKind::EmptyStar);
}

TEST_CASE("bounded derivations", "[rewrite]") {
  auto const same = derive_bounded(parse_identity("x = x"), trahtman_basis());
  REQUIRE(same);
  CHECK(same->empty());

  auto const two = derive_bounded(parse_identity("x^6 = x^2"), {parse_identity("x^2 = x^4")});
  REQUIRE(two);
  CHECK(two->steps.size() == 2);
  CHECK(replays(*two));
  CHECK(two->steps.front().before == w("x^6"));
  CHECK(two->steps.back().after == w("x^2"));

  auto const cor = derive_bounded(parse_identity("xyxzx = xzxyx"), trahtman_basis());
  REQUIRE(cor);
  CHECK(cor->steps.size() <= 6);
  CHECK(replays(*cor));
  CHECK(cor->steps.front().before == w("xyxzx"));
  CHECK(cor->steps.back().after == w("xzxyx"));
  // pinned shortest chain
  CHECK(cor->to_string()
        == "step 1: xyxzx --[xyx=xyxyx,LR,0]--> xyxyxzx\n"
           "step 2: xyxyxzx --[xyx=xyxyx,LR,4]--> xyxyxzxzx\n"
           "step 3: xyxyxzxzx --[xxyy=yyxx,LR,0]--> xzxzxyxyx\n"
           "step 4: xzxzxyxyx --[xyx=xyxyx,RL,0]--> xzxyxyx\n"
           "step 5: xzxyxyx --[xyx=xyxyx,RL,2]--> xzxyx\n");

  // a false identity is never derived
  CHECK(!derive_bounded(parse_identity("xy = yx"), trahtman_basis()));
  DeriveOptions tight;
  tight.max_steps = 1;
  CHECK(!derive_bounded(parse_identity("xyxzx = xzxyx"), trahtman_basis(), tight));
}

TEST_CASE("traces serialise one line per step", "[rewrite]") {
  RewriteTrace t;
  Identity     rule = exponent_identity(2);
  t.steps.push_back({0, kExpN, rule, RuleDirection::LeftToRight, {{"x", w("x")}}, w("xx"), w("x^4")});
  t.steps.push_back({0, kExpN, rule, RuleDirection::RightToLeft, {{"x", w("x")}}, w("x^4"), w("xx")});
  CHECK(t.to_string() == "step 1: xx --[EXP_N,LR,0]--> xxxx\nstep 2: xxxx --[EXP_N,RL,0]--> xx\n");
  CHECK(replays(t));
  t.steps[1].position = 1;
  CHECK(!replays(t));
}
