// Independent oracles for the test suites. Nothing here calls into the
// library except to convert results for comparison.

#ifndef BSG_TESTS_SUPPORT_HPP_
#define BSG_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bsg/error.hpp"

#define CHECK_THROWS_KIND(expr, expected)                                  \
  do {                                                                     \
    bool thrown_ = false;                                                  \
    try {                                                                  \
      (void) (expr);                                                       \
    } catch (bsg::Error const& e_) {                                       \
      thrown_ = true;                                                      \
      CHECK(bsg::to_string(e_.kind()) == bsg::to_string(expected));      \
    }                                                                      \
    CHECK(thrown_);                                                        \
  } while (false)

namespace oracle {

  using Table = std::vector<std::vector<int>>;

  struct Group {
    int                           order;
    int                           identity;
    std::function<int(int, int)>  mul;
  };

  inline Group cyclic(int m) {
    return {m, 0, [m](int a, int b) { return (a + b) % m; }};
  }

  // Permutations of {0,1,2} in lexicographic one-line order, composed left
  // to right: (p q)(i) = q(p(i)).
  inline Group s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return {6, 0, [perms](int a, int b) {
              std::array<int, 3> r{};
              for (int i = 0; i < 3; ++i) {
                r[i] = perms[b][perms[a][i]];
              }
              return static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
            }};
  }

  inline Group product(Group g, Group h) {
    int const m = h.order;
    return {g.order * h.order, g.identity * m + h.identity, [g, h, m](int a, int b) {
              return g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
            }};
  }

  // B(G, k) straight from the triple rule. Zero is 0, (i, g, j) is
  // 1 + (i |G| + g) k + j.
  inline Table brandt(Group const& g, int k) {
    int const n = k * k * g.order + 1;
    auto      triple = [&](int x) {
      x -= 1;
      return std::array<int, 3>{x / (g.order * k), (x / k) % g.order, x % k};
    };
    Table t(n, std::vector<int>(n, 0));
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        auto [i, x, j]  = triple(a);
        auto [kk, y, l] = triple(b);
        t[a][b]         = j == kk ? 1 + (i * g.order + g.mul(x, y)) * k + l : 0;
      }
    }
    return t;
  }

  inline Table group_table(Group const& g) {
    Table t(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b) {
        t[a][b] = g.mul(a, b);
      }
    }
    return t;
  }

  // Words are strings of single-letter variables.
  inline int evaluate(Table const& t, std::string const& w, std::map<char, int> const& e) {
    int v = e.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      v = t[v][e.at(w[i])];
    }
    return v;
  }

  inline int evaluate_right(Table const& t, std::string const& w, std::map<char, int> const& e) {
    int v = e.at(w.back());
    for (std::size_t i = w.size() - 1; i-- > 0;) {
      v = t[e.at(w[i])][v];
    }
    return v;
  }

  inline void for_each_evaluation(int size, std::set<char> const& vars,
                                  std::function<bool(std::map<char, int> const&)> const& f) {
    std::vector<char> vs(vars.begin(), vars.end());
    std::map<char, int> e;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
      if (k == vs.size()) {
        return f(e);
      }
      for (int x = 0; x < size; ++x) {
        e[vs[k]] = x;
        if (!rec(k + 1)) {
          return false;
        }
      }
      return true;
    };
    rec(0);
  }

  inline std::set<char> letters(std::string const& a, std::string const& b = "") {
    std::set<char> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return s;
  }

  inline bool holds(Table const& t, std::string const& lhs, std::string const& rhs) {
    bool ok = true;
    for_each_evaluation(static_cast<int>(t.size()), letters(lhs, rhs), [&](auto const& e) {
      ok = evaluate(t, lhs, e) == evaluate(t, rhs, e);
      return ok;
    });
    return ok;
  }

  inline bool group_word_is_one(Group const& g, std::string const& w) {
    auto const t  = group_table(g);
    bool       ok = true;
    for_each_evaluation(g.order, letters(w), [&](auto const& e) {
      ok = evaluate(t, w, e) == g.identity;
      return ok;
    });
    return ok;
  }

  // Every word over the given letters with length in [1, max_len].
  inline std::vector<std::string> all_words(std::string const& alphabet, std::size_t max_len) {
    std::vector<std::string> out, layer{""};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::string> next;
      for (auto const& w : layer) {
        for (char c : alphabet) {
          next.push_back(w + c);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  // Words in which every letter occurs inside some factor ypy.
  inline bool repeated(std::string const& w) {
    std::vector<bool> covered(w.size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] == w[j]) {
          for (std::size_t k = i; k <= j; ++k) {
            covered[k] = true;
          }
        }
      }
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  }

}  // namespace oracle

#endif  // BSG_TESTS_SUPPORT_HPP_
