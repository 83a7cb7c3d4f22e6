#include "bsg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsg/constructions.hpp"
#include "bsg/rewrite.hpp"
#include "bsg/semigroup.hpp"
#include "bsg/structure.hpp"
#include "bsg/words.hpp"

namespace bsg::cli {

  namespace {
    using json = nlohmann::ordered_json;

    struct Result {
      int                      code = kOk;
      std::vector<std::string> lines;
      json                     record = json::object();
    };

    FiniteSemigroup load_semigroup(std::string const& spec) {
      if (!spec.empty() && spec.front() == '@') {
        return load_table_file(spec.substr(1));
      }
      return parse_builtin(spec).semigroup;
    }

    element_type parse_element(FiniteSemigroup const& s, std::string const& text) {
      if (!text.empty() && std::ranges::all_of(text, [](unsigned char c) { return std::isdigit(c); })) {
        auto const v = std::stoull(text);
        if (v < s.size()) {
          return static_cast<element_type>(v);
        }
      }
      for (element_type x = 0; x < s.size(); ++x) {
        if (s.label(x) == text) {
          return x;
        }
      }
      throw Error(ErrorKind::InvalidArgument, "no element " + text);
    }

    json counterexample_json(FiniteSemigroup const& s, Counterexample const& c) {
      json assignment = json::object();
      for (auto const& [v, x] : c.evaluation.assignment) {
        assignment[v] = s.label(x);
      }
      return json{{"assignment", assignment},
                  {"lhs", s.label(c.lhs_value)},
                  {"rhs", s.label(c.rhs_value)}};
    }

    std::vector<std::string> trace_lines(RewriteTrace const& trace) {
      std::vector<std::string> out;
      std::istringstream       in(trace.to_string());
      for (std::string line; std::getline(in, line);) {
        out.push_back(line);
      }
      return out;
    }

    std::vector<Identity> read_identity_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path);
      }
      return read_identities(in);
    }

    ////////////////////////////////////////////////////////////////////////
    // Verbs
    ////////////////////////////////////////////////////////////////////////

    Result check(FiniteSemigroup const& s, Identity const& id, CheckOptions const& options) {
      Result     r;
      auto const v = identity_holds(s, id, options);
      r.record["identity"] = id.to_string();
      if (v.holds) {
        r.lines = {"HOLDS", "identity: " + id.to_string()};
        r.record["verdict"] = "holds";
      } else {
        r.code  = kFails;
        r.lines = {"FAILS " + describe(s, *v.counterexample), "identity: " + id.to_string()};
        r.record["verdict"]        = "fails";
        r.record["counterexample"] = counterexample_json(s, *v.counterexample);
      }
      r.lines.push_back("evaluations: " + std::to_string(v.evaluations_checked));
      r.record["evaluations"] = v.evaluations_checked;
      return r;
    }

    Result basis_verify(FiniteSemigroup const&    s,
                        std::vector<Identity> const& ids,
                        CheckOptions const&       options) {
      Result                   r;
      std::vector<std::string> detail;
      json                     items = json::array();
      std::optional<std::string> first_failure;
      for (auto const& id : ids) {
        auto const v    = identity_holds(s, id, options);
        json       item = {{"identity", id.to_string()}, {"verdict", v.holds ? "holds" : "fails"}};
        if (v.holds) {
          detail.push_back("holds " + id.to_string());
        } else {
          auto const d = describe(s, *v.counterexample);
          detail.push_back("fails " + id.to_string() + " : " + d);
          item["counterexample"] = counterexample_json(s, *v.counterexample);
          if (!first_failure) {
            first_failure          = id.to_string() + " : " + d;
            r.record["counterexample"] = item["counterexample"];
          }
        }
        items.push_back(std::move(item));
      }
      r.code = first_failure ? kFails : kOk;
      r.lines.push_back(first_failure ? "FAILS " + *first_failure : "HOLDS");
      r.lines.insert(r.lines.end(), detail.begin(), detail.end());
      r.record["verdict"]    = first_failure ? "fails" : "holds";
      r.record["identities"] = std::move(items);
      return r;
    }

    struct Pipeline {
      Word          repeated;
      Decomposition decomposition;
      RewriteTrace  trace;
    };

    Pipeline decompose_word(Word const& w, std::size_t n) {
      auto elim = eliminate_single_occurrences(w, n);
      auto dec  = cell_decompose(elim.word, n);
      RewriteTrace all = elim.trace;
      all.steps.insert(all.steps.end(), dec.trace.steps.begin(), dec.trace.steps.end());
      return Pipeline{std::move(elim.word), std::move(dec), std::move(all)};
    }

    Result decompose(Word const& w, std::size_t n) {
      auto const p    = decompose_word(w, n);
      auto const& form = p.decomposition.form;
      Result      r;
      r.lines = {"CELLS " + form.to_string(), "repeated: " + p.repeated.to_string(),
                 "flatten: " + form.flatten().to_string(), "trace:"};
      auto const steps = trace_lines(p.trace);
      r.lines.insert(r.lines.end(), steps.begin(), steps.end());
      json cells = json::array();
      for (auto const& c : form.cells) {
        cells.push_back({c.head, c.body.to_string()});
      }
      r.record["cells"]   = std::move(cells);
      r.record["flatten"] = form.flatten().to_string();
      r.record["trace"]   = steps;
      return r;
    }

    Result star(Word const& w, std::size_t n) {
      auto const p = decompose_word(w, n);
      auto const h = star_word(p.decomposition.form);
      Result     r;
      r.lines = {"STAR " + h.to_string(), "cells: " + p.decomposition.form.to_string()};
      r.record["star"]  = h.to_string();
      r.record["cells"] = p.decomposition.form.to_string();
      return r;
    }

    json class_json(StructureClass const& c) {
      json j = {{"kind", std::string(to_string(c.kind))}};
      j["q_order"]    = c.group_part ? json(c.group_part->order()) : json(nullptr);
      j["index_size"] = c.index_size ? json(*c.index_size) : json(nullptr);
      return j;
    }

    Result separate(FiniteSemigroup const& s,
                    element_type           a,
                    element_type           b,
                    std::size_t            n,
                    CheckOptions const&    options) {
      auto const sep = separate_regular_pair(s, a, b, n, options);
      auto const& q  = sep.hom.target();
      Result      r;
      r.lines = {"SEPARATED z=" + s.label(sep.chosen_z),
                 s.label(a) + " -> " + q.label(sep.hom(a)) + ", " + s.label(b) + " -> "
                     + q.label(sep.hom(b)),
                 "quotient size: " + std::to_string(q.size()), sep.quotient_class.report()};
      r.record = class_json(sep.quotient_class);
      r.record["verdict"]       = "separated";
      r.record["chosen_z"]      = s.label(sep.chosen_z);
      r.record["quotient_size"] = q.size();
      return r;
    }

    Result classify_verb(FiniteSemigroup const& s, bool witness) {
      auto const c = classify(s);
      Result     r;
      r.lines  = {"KIND=" + std::string(to_string(c.kind)), c.report()};
      r.record = class_json(c);
      if (witness && c.witness) {
        json map = json::object();
        for (element_type x = 0; x < s.size(); ++x) {
          auto const image = c.witness->target().label((*c.witness)(x));
          r.lines.push_back(s.label(x) + " -> " + image);
          map[s.label(x)] = image;
        }
        r.record["witness"] = std::move(map);
      }
      return r;
    }

    Result build(FiniteSemigroup const& s, std::string const& path) {
      Result r;
      r.record["size"] = s.size();
      if (path.empty()) {
        r.lines = {"BUILT size=" + std::to_string(s.size())};
        std::ostringstream table;
        write_table(table, s);
        std::istringstream in(table.str());
        for (std::string line; std::getline(in, line);) {
          r.lines.push_back(line);
        }
      } else {
        save_table_file(path, s);
        r.lines          = {"BUILT size=" + std::to_string(s.size()) + " file=" + path};
        r.record["file"] = path;
      }
      return r;
    }

    Result derive(Identity const& id, std::vector<Identity> const& basis, DeriveOptions const& options) {
      Result r;
      r.record["identity"] = id.to_string();
      auto const trace     = derive_bounded(id, basis, options);
      if (!trace) {
        r.code              = kFails;
        r.lines             = {"NOT_FOUND not found within bounds"};
        r.record["verdict"] = "not_found";
        return r;
      }
      auto const steps = trace_lines(*trace);
      r.lines          = {"FOUND steps=" + std::to_string(trace->steps.size())};
      r.lines.insert(r.lines.end(), steps.begin(), steps.end());
      r.record["verdict"] = "found";
      r.record["steps"]   = trace->steps.size();
      r.record["trace"]   = steps;
      return r;
    }
  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Identity checking and structure tools for Brandt semigroups", "bsg"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "plain";
    unsigned    jobs   = 1;
    std::uint64_t budget = CheckOptions{}.budget;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "json-lines"}));
    app.add_option("--jobs", jobs, "Worker threads for exhaustive checks (0 = all cores)");
    app.add_option("--budget", budget, "Maximum evaluations per exhaustive check");

    std::string spec, identity, word, output, positive_basis, basis_name = "trahtman";
    std::string elem_a, elem_b;
    std::size_t n = 0;
    bool        abelian = false, witness = false, do_check = false;
    DeriveOptions derive_options;

    auto* c_check = app.add_subcommand("check", "Exhaustively check an identity");
    c_check->add_option("-s,--semigroup", spec, "Builtin name or @table-file")->required();
    c_check->add_option("-i,--identity", identity, "Identity, e.g. \"xyx = xyxyx\"")->required();

    auto* c_basis = app.add_subcommand("basis-verify", "Check every identity of a basis");
    c_basis->add_option("-s,--semigroup", spec, "Builtin name or @table-file")->required();
    c_basis->add_option("-n", n, "Exponent")->required()->check(CLI::PositiveNumber);
    c_basis->add_option("--positive-basis", positive_basis, "Word file, or 'abelian'");
    c_basis->add_flag("--abelian", abelian, "Use the basis for abelian groups of exponent n");

    auto* c_decompose = app.add_subcommand("decompose", "Rewrite a repeated word into cells");
    c_decompose->add_option("-w,--word", word, "Word")->required();
    c_decompose->add_option("-n", n, "Exponent")->required()->check(CLI::PositiveNumber);

    auto* c_star = app.add_subcommand("star", "Print the star word of a repeated word");
    c_star->add_option("-w,--word", word, "Word")->required();
    c_star->add_option("-n", n, "Exponent")->required()->check(CLI::PositiveNumber);

    auto* c_separate = app.add_subcommand("separate", "Separate two regular elements");
    c_separate->add_option("-s,--semigroup", spec, "Builtin name or @table-file")->required();
    c_separate->add_option("-a", elem_a, "Element index or label")->required();
    c_separate->add_option("-b", elem_b, "Element index or label")->required();
    c_separate->add_option("-n", n, "Exponent")->required()->check(CLI::PositiveNumber);

    auto* c_classify = app.add_subcommand("classify", "Recognise a group, group with zero or Brandt semigroup");
    c_classify->add_option("-s,--semigroup", spec, "Builtin name or @table-file")->required();
    c_classify->add_flag("-v,--witness", witness, "Print the coordinate map");

    auto* c_build = app.add_subcommand("build", "Write the table of a builtin");
    c_build->add_option("-s,--semigroup", spec, "Builtin name or @table-file")->required();
    c_build->add_option("-o,--output", output, "Table file (stdout if omitted)");

    auto* c_derive = app.add_subcommand("derive", "Search for a derivation from a basis");
    c_derive->add_option("-i,--identity", identity, "Identity")->required();
    c_derive->add_option("--basis", basis_name, "'trahtman' or an identity file");
    c_derive->add_option("--max-steps", derive_options.max_steps, "Expansion budget")
        ->check(CLI::PositiveNumber);
    c_derive->add_option("--max-length", derive_options.max_length, "Longest substitution image")
        ->check(CLI::PositiveNumber);
    c_derive->add_option("--max-word-length", derive_options.max_word_length,
                         "Longest explored word (0 = automatic)");

    auto* c_ln = app.add_subcommand("ln", "Print, and optionally check, the identity L_n");
    c_ln->add_option("-n", n, "Index")->required()->check(CLI::PositiveNumber);
    c_ln->add_flag("--check", do_check, "Check it in the semigroup given by -s");
    c_ln->add_option("-s,--semigroup", spec, "Builtin name or @table-file");

    std::ranges::reverse(args);
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
    }

    CheckOptions options;
    options.jobs   = jobs;
    options.budget = budget;
    Result result;
    try {
      if (c_check->parsed()) {
        result = check(load_semigroup(spec), parse_identity(identity), options);
      } else if (c_basis->parsed()) {
        std::vector<Identity> ids;
        if (abelian) {
          ids = abelian_corollary_basis(n);
        } else {
          PositiveBasis pb;
          if (positive_basis == "abelian") {
            pb = abelian_positive_basis(n);
          } else if (!positive_basis.empty()) {
            std::ifstream in(positive_basis);
            if (!in) {
              throw Error(ErrorKind::Io, "cannot open " + positive_basis);
            }
            pb = read_positive_basis(in);
          }
          ids = theorem_basis(n, pb);
        }
        result = basis_verify(load_semigroup(spec), ids, options);
      } else if (c_decompose->parsed()) {
        result = decompose(parse_word(word), n);
      } else if (c_star->parsed()) {
        result = star(parse_word(word), n);
      } else if (c_separate->parsed()) {
        auto const s = load_semigroup(spec);
        result = separate(s, parse_element(s, elem_a), parse_element(s, elem_b), n, options);
      } else if (c_classify->parsed()) {
        result = classify_verb(load_semigroup(spec), witness);
      } else if (c_build->parsed()) {
        result = build(load_semigroup(spec), output);
      } else if (c_derive->parsed()) {
        auto const basis = basis_name == "trahtman" ? trahtman_basis() : read_identity_file(basis_name);
        result = derive(parse_identity(identity), basis, derive_options);
      } else if (c_ln->parsed()) {
        auto const l = ln_identity(n);
        if (do_check) {
          if (spec.empty()) {
            err << "error: ln --check needs -s\n";
            return kUsage;
          }
          result = check(load_semigroup(spec), l, options);
        }
        result.lines.insert(result.lines.begin() + (do_check ? 1 : 0),
                            "L" + std::to_string(n) + ": " + l.to_string());
        result.record["ln"] = l.to_string();
      }
    } catch (Error const& e) {
      err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
      return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kInvalidInput;
    }

    if (format == "json-lines") {
      out << result.record.dump() << "\n";
    } else {
      for (auto const& line : result.lines) {
        out << line << "\n";
      }
    }
    return result.code;
  }

}  // namespace bsg::cli
