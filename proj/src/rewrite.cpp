#include "bsg/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace bsg {

  RuleDirection flip(RuleDirection d) noexcept {
    return d == RuleDirection::LeftToRight ? RuleDirection::RightToLeft
                                           : RuleDirection::LeftToRight;
  }

  namespace {
    std::string compact(Identity const& id) {
      return id.lhs.to_string() + "=" + id.rhs.to_string();
    }

    Word substitute(Word const& pattern, Substitution const& sub) {
      Word out;
      for (auto const& v : pattern) {
        auto it = sub.find(v);
        if (it == sub.end() || it->second.empty()) {
          throw Error(ErrorKind::NoMatch, "substitution does not bind " + v + " to a nonempty word");
        }
        out *= it->second;
      }
      return out;
    }
  }  // namespace

  std::string RewriteTrace::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      auto const& s = steps[i];
      out += "step " + std::to_string(i + 1) + ": " + s.before.to_string() + " --[" + s.rule_name
             + "," + (s.direction == RuleDirection::LeftToRight ? "LR" : "RL") + ","
             + std::to_string(s.position) + "]--> " + s.after.to_string() + "\n";
    }
    return out;
  }

  Word apply_rule_at(Word const&         w,
                     Identity const&     rule,
                     std::size_t         position,
                     Substitution const& substitution,
                     RuleDirection       direction) {
    bool const  forward = direction == RuleDirection::LeftToRight;
    Word const& from    = forward ? rule.lhs : rule.rhs;
    Word const& to      = forward ? rule.rhs : rule.lhs;
    Word const  source  = substitute(from, substitution);
    Word const  target  = substitute(to, substitution);
    if (position > w.size() || source.size() > w.size() - position
        || w.factor(position, source.size()) != source) {
      throw Error(ErrorKind::NoMatch, source.to_string() + " does not occur in " + w.to_string()
                                          + " at position " + std::to_string(position));
    }
    return w.factor(0, position) * target
           * w.factor(position + source.size(), w.size() - position - source.size());
  }

  bool replays(RewriteTrace const& trace) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      auto const& s = trace.steps[i];
      if (i > 0 && trace.steps[i - 1].after != s.before) {
        return false;
      }
      try {
        if (apply_rule_at(s.before, s.rule, s.position, s.substitution, s.direction) != s.after) {
          return false;
        }
      } catch (Error const&) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lemma-style transformations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    RewriteStep reduced_exponent_step(Word const&        before,
                                      std::size_t        position,
                                      std::string const& flank,
                                      Word const&        middle,
                                      std::size_t        n) {
      Identity const rule = reduced_exponent_identity(n);
      Substitution   sub{{"x", Word{flank}}, {"y", middle}};
      Word           after = apply_rule_at(before, rule, position, sub, RuleDirection::LeftToRight);
      return RewriteStep{position, kExpNRed, rule, RuleDirection::LeftToRight, std::move(sub),
                         before, std::move(after)};
    }
  }  // namespace

  Rewritten eliminate_single_occurrences(Word const& w, std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    if (auto r = is_repeated(w); !r.repeated) {
      throw Error(ErrorKind::NotRepeated,
                  w.to_string() + " is not repeated: " + *r.witness + " lies in no cell");
    }
    Rewritten out{w, {}};
    while (true) {
      Word const& cur = out.word;
      std::size_t target = cur.size();
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur.occurrences(cur[i]) == 1) {
          target = i;
          break;
        }
      }
      if (target == cur.size()) {
        return out;
      }
      // shortest cell z p z with target strictly inside, leftmost on ties
      std::size_t best_i = cur.size(), best_j = 0;
      for (std::size_t i = target; i-- > 0;) {
        for (std::size_t j = target + 1; j < cur.size(); ++j) {
          if (cur[j] == cur[i]) {
            if (best_i == cur.size() || j - i <= best_j - best_i) {
              best_i = i;
              best_j = j;
            }
            break;
          }
        }
      }
      if (best_i == cur.size()) {
        throw Error(ErrorKind::NotRepeated, cur[target] + " lies in no cell of " + cur.to_string());
      }
      auto step = reduced_exponent_step(cur, best_i, cur[best_i],
                                        cur.factor(best_i + 1, best_j - best_i - 1), n);
      out.word = step.after;
      out.trace.steps.push_back(std::move(step));
    }
  }

  Word CellForm::flatten() const {
    Word out;
    for (auto const& c : cells) {
      out *= Word{c.head} * c.body * Word{c.head};
    }
    return out;
  }

  std::string CellForm::to_string() const {
    std::string out;
    for (auto const& c : cells) {
      out += "(" + c.head + "," + c.body.to_string() + ")";
    }
    return out;
  }

  Decomposition cell_decompose(Word const& w, std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    for (auto const& v : w) {
      if (w.occurrences(v) < 2) {
        throw Error(ErrorKind::HasSingleOccurrence, v + " occurs once in " + w.to_string());
      }
    }
    Decomposition out;
    out.form.exponent_n = n;
    auto& cells         = out.form.cells;
    Word  rem           = w;
    while (!rem.empty()) {
      std::string const head  = rem[0];
      std::size_t       last  = 0;
      for (std::size_t i = 1; i < rem.size(); ++i) {
        if (rem[i] == head) {
          last = i;
        }
      }
      if (last > 0) {
        cells.push_back({head, rem.factor(1, last - 1)});
        rem = rem.factor(last + 1, rem.size() - last - 1);
        continue;
      }
      // The head occurs once in the remainder, hence in an earlier body.
      std::size_t t = cells.size();
      while (t-- > 0 && cells[t].body.occurrences(head) == 0) {
      }
      if (t == static_cast<std::size_t>(-1)) {
        throw Error(ErrorKind::HasSingleOccurrence, head + " occurs once in " + w.to_string());
      }
      Word const& body = cells[t].body;
      std::size_t q    = body.size();
      while (body[--q] != head) {
      }
      Word const r = body.factor(0, q);
      Word const s = body.factor(q + 1, body.size() - q - 1);
      Word       later;
      std::size_t offset = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c < t) {
          offset += cells[c].body.size() + 2;
        } else if (c > t) {
          later *= Word{cells[c].head} * cells[c].body * Word{cells[c].head};
        }
      }
      Word const middle = s * Word{cells[t].head} * later;
      Word const before = out.form.flatten() * rem;
      auto       step   = reduced_exponent_step(before, offset + 1 + q, head, middle, n);
      cells[t].body     = r * power(Word{head} * middle, n - 1) * Word{head} * s;
      cells.push_back({head, middle});
      rem = rem.factor(1, rem.size() - 1);
      if (out.form.flatten() * rem != step.after) {
        throw Error(ErrorKind::InvalidArgument, "internal error: cell bookkeeping diverged");
      }
      out.trace.steps.push_back(std::move(step));
    }
    return out;
  }

  Word star_word(CellForm const& form) {
    if (form.exponent_n == 0) {
      throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    Word out;
    for (auto it = form.cells.rbegin(); it != form.cells.rend(); ++it) {
      out *= power(it->body * Word{it->head}, 2 * form.exponent_n - 2) * it->body;
    }
    if (out.empty()) {
      throw Error(ErrorKind::EmptyStar, "n = 1 and every cell body is empty");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded derivation search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct WordHash {
      std::size_t operator()(Word const& w) const noexcept {
        std::size_t h = w.size();
        for (auto const& s : w) {
          h = h * 1000003u ^ std::hash<std::string>{}(s);
        }
        return h;
      }
    };

    // Every substitution making `pattern` match w at `pos`, images of length
    // at most max_len, shorter images first.
    void matches(Word const&                pattern,
                 Word const&                w,
                 std::size_t                pos,
                 std::size_t                max_len,
                 std::size_t                k,
                 Substitution&              sub,
                 std::vector<Substitution>& found) {
      if (k == pattern.size()) {
        found.push_back(sub);
        return;
      }
      auto const& v  = pattern[k];
      auto        it = sub.find(v);
      if (it != sub.end()) {
        auto const& img = it->second;
        if (img.size() <= w.size() - pos && w.factor(pos, img.size()) == img) {
          matches(pattern, w, pos + img.size(), max_len, k + 1, sub, found);
        }
        return;
      }
      for (std::size_t len = 1; len <= max_len && pos + len <= w.size(); ++len) {
        sub[v] = w.factor(pos, len);
        matches(pattern, w, pos + len, max_len, k + 1, sub, found);
      }
      sub.erase(v);
    }

    struct Node {
      Word                       word;
      std::size_t                depth;
      std::size_t                parent;
      std::optional<RewriteStep> step;  // parent -> this
    };

    class Side {
     public:
      explicit Side(Word start) {
        nodes.push_back({start, 0, 0, std::nullopt});
        index.emplace(std::move(start), 0);
        frontier.push_back(0);
      }

      std::vector<Node>                                   nodes;
      std::unordered_map<Word, std::size_t, WordHash>     index;
      std::vector<std::size_t>                            frontier;

      // Steps from the start word to node k.
      std::vector<RewriteStep> path_to(std::size_t k) const {
        std::vector<RewriteStep> out;
        while (k != 0) {
          out.push_back(*nodes[k].step);
          k = nodes[k].parent;
        }
        std::ranges::reverse(out);
        return out;
      }
    };
  }  // namespace

  std::optional<RewriteTrace> derive_bounded(Identity const&              id,
                                             std::vector<Identity> const& basis,
                                             DeriveOptions const&         options) {
    if (id.lhs == id.rhs) {
      return RewriteTrace{};
    }
    std::size_t const cap = options.max_word_length != 0
                                ? options.max_word_length
                                : 2 * std::max(id.lhs.size(), id.rhs.size());
    Side        forward(id.lhs), backward(id.rhs);
    std::size_t expanded = 0;

    auto const successors = [&](Word const& w) {
      std::vector<RewriteStep> out;
      for (auto const& rule : basis) {
        std::string const name = compact(rule);
        for (auto dir : {RuleDirection::LeftToRight, RuleDirection::RightToLeft}) {
          Word const& from = dir == RuleDirection::LeftToRight ? rule.lhs : rule.rhs;
          Word const& to   = dir == RuleDirection::LeftToRight ? rule.rhs : rule.lhs;
          auto const  need = to.alphabet();
          for (std::size_t pos = 0; pos < w.size(); ++pos) {
            std::vector<Substitution> found;
            Substitution              sub;
            matches(from, w, pos, options.max_length, 0, sub, found);
            for (auto& m : found) {
              if (!std::ranges::all_of(need, [&](auto const& v) { return m.contains(v); })) {
                continue;
              }
              Word after = apply_rule_at(w, rule, pos, m, dir);
              if (after.size() > cap || after == w) {
                continue;
              }
              out.push_back(RewriteStep{pos, name, rule, dir, std::move(m), w, std::move(after)});
            }
          }
        }
      }
      return out;
    };

    while (!forward.frontier.empty() && !backward.frontier.empty() && expanded < options.max_steps) {
      bool const grow_forward = forward.frontier.size() <= backward.frontier.size();
      Side&      side         = grow_forward ? forward : backward;
      Side&      other        = grow_forward ? backward : forward;
      std::vector<std::size_t> next;
      for (auto k : side.frontier) {
        if (expanded >= options.max_steps) {
          break;
        }
        ++expanded;
        Word const word = side.nodes[k].word;
        for (auto& step : successors(word)) {
          if (side.index.contains(step.after)) {
            continue;
          }
          std::size_t const idx = side.nodes.size();
          side.index.emplace(step.after, idx);
          Word after = step.after;
          side.nodes.push_back({std::move(after), side.nodes[k].depth + 1, k, std::move(step)});
          next.push_back(idx);
        }
      }
      // best meeting point among the new layer
      std::optional<std::pair<std::size_t, std::size_t>> best;  // (this idx, other idx)
      for (auto idx : next) {
        auto it = other.index.find(side.nodes[idx].word);
        if (it == other.index.end()) {
          continue;
        }
        if (!best) {
          best = {idx, it->second};
          continue;
        }
        auto const total     = side.nodes[idx].depth + other.nodes[it->second].depth;
        auto const best_total = side.nodes[best->first].depth + other.nodes[best->second].depth;
        if (total < best_total
            || (total == best_total && side.nodes[idx].word < side.nodes[best->first].word)) {
          best = {idx, it->second};
        }
      }
      if (best) {
        std::size_t const f = grow_forward ? best->first : best->second;
        std::size_t const b = grow_forward ? best->second : best->first;
        RewriteTrace      trace;
        trace.steps   = forward.path_to(f);
        auto back     = backward.path_to(b);
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
          RewriteStep s = *it;
          std::swap(s.before, s.after);
          s.direction = flip(s.direction);
          trace.steps.push_back(std::move(s));
        }
        return trace;
      }
      side.frontier = std::move(next);
    }
    return std::nullopt;
  }

}  // namespace bsg
