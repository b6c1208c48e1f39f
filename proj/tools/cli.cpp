#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ambig/classify.hpp"
#include "ambig/degree.hpp"
#include "ambig/disambiguate.hpp"
#include "ambig/error.hpp"
#include "ambig/graph.hpp"
#include "ambig/io.hpp"
#include "ambig/oracle.hpp"
#include "ambig/random.hpp"
#include "ambig/split_tree.hpp"

namespace ambig::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFileFormat = R"(Automaton file format (UTF-8, line-based, `#` starts a comment to end-of-line, blank lines ignored):
  line 1: `nba`
  `alphabet: <sym> <sym> ...`   (whitespace-separated tokens, no whitespace inside tokens, `#` and `:` forbidden in tokens)
  `states: <id> <id> ...`
  `initial: <id> ...`
  `accepting: <id> ...`        (may be empty)
  `trans:` followed by one `src sym dst` triple per line until EOF.
Lasso word literal: `u:v` with u,v as concatenated single-token symbols separated by `.` when tokens exceed one character (e.g. `ab:b`, `:aab`, `req.ack:req`). Empty u allowed; empty v rejected.

Exit status: 0 success, 1 domain error, 2 usage, parse or I/O error.
Errors are reported as `error: <CODE>: <detail>`.)";

// Failure to read or write a file; reported with exit status 2.
struct IoError {
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open '" + path + "' for reading"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Nba load(const std::string& path) { return parse_automaton(read_file(path)); }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError{"cannot open '" + path + "' for writing"};
  file << text;
  if (!file) throw IoError{"failed writing '" + path + "'"};
}

std::vector<std::string> names(const Nba& a,
                               const std::vector<StateId>& states) {
  std::vector<std::string> out;
  for (StateId q : states) out.push_back(a.state_name(q));
  return out;
}

Json witness_json(const Nba& a, const PatternWitness& w) {
  Json j;
  j["kind"] = std::string(pattern_kind_name(w.kind));
  j["p"] = a.state_name(w.p);
  j["q"] = w.q ? Json(a.state_name(*w.q)) : Json(nullptr);
  j["v"] = format_word(a, w.v);
  Json paths = Json::array();
  for (const auto& path : w.paths) {
    paths.push_back(names(a, path.state_sequence()));
  }
  j["paths"] = paths;
  return j;
}

struct Options {
  std::string file;
  std::string second_file;
  std::string output;
  bool json = false;
  bool trim_first = false;
  bool trim = false;
  bool stats = false;
  bool reduced = false;
  bool exact = false;
  std::optional<unsigned> exceeds;
  unsigned max_degree = 8;
  std::string word;
  std::size_t depth = kDefaultSplitDepth;
  std::string lasso;
  std::size_t max_u = 4;
  std::size_t max_v = 4;
  std::uint64_t seed = 0;
  std::size_t states = 3;
  std::size_t letters = 2;
  double density = 0.3;
  double accept_frac = 0.3;
  std::string symbol = "$";
};

int do_classify(const Options& o, std::ostream& out) {
  Nba a = load(o.file);
  if (o.trim_first) a = trim_nba(a);
  const auto cls = classify(a);
  if (o.json) {
    Json j;
    j["class"] = std::string(ambiguity_tag_name(cls.tag));
    j["dpa"] = cls.dpa ? Json(*cls.dpa) : Json(nullptr);
    j["witness"] = cls.witness ? witness_json(a, *cls.witness) : Json(nullptr);
    out << j.dump() << '\n';
    return 0;
  }
  out << "class: " << ambiguity_tag_name(cls.tag) << '\n';
  if (cls.dpa) out << "dpa: " << *cls.dpa << '\n';
  if (cls.witness) out << "witness: " << describe_witness(a, *cls.witness) << '\n';
  return 0;
}

int do_degree(const Options& o, std::ostream& out) {
  const Nba a = load(o.file);
  const DegreeResult r =
      o.exact ? exact_degree(a, o.max_degree) : decide_degree_exceeds(a, *o.exceeds);
  std::optional<std::string> witness;
  if (r.witness_lasso) witness = format_lasso(a, *r.witness_lasso);
  if (o.json) {
    Json j;
    if (o.exact) {
      j["exact"] = *r.exact;
    } else {
      j["exceeds"] = r.exceeds;
    }
    if (witness) j["witness"] = *witness;
    out << j.dump() << '\n';
    return 0;
  }
  if (o.exact) {
    out << "exact: " << *r.exact << '\n';
  } else {
    out << "exceeds: " << (r.exceeds ? "true" : "false") << '\n';
  }
  if (witness) out << "witness: " << *witness << '\n';
  return 0;
}

int do_disambiguate(const Options& o, std::ostream& out) {
  const Nba a = load(o.file);
  Nba result = disambiguate(a);
  const std::size_t reachable = result.num_states();
  const std::size_t accepting = result.accepting().size();
  if (o.trim) result = trim_nba(result);
  emit(serialize_automaton(result), o.output, out);
  if (o.stats) {
    const auto cap = static_cast<std::uint64_t>(
        std::pow(3.0, static_cast<double>(a.num_states())));
    out << "# reachable states: " << reachable << '\n'
        << "# state cap (3^n): " << cap << '\n'
        << "# accepting states: " << accepting << '\n';
  }
  return 0;
}

int do_splittree(const Options& o, std::ostream& out) {
  const Nba a = load(o.file);
  const Word w = parse_word(a, o.word);
  out << render_split_tree(a, build_split_tree(a, w, o.reduced, o.depth));
  return 0;
}

int do_count(const Options& o, std::ostream& out) {
  const Nba a = load(o.file);
  const auto c = count_runs(a, parse_lasso(a, o.lasso));
  if (o.json) {
    Json j;
    j["cardinality"] = cardinality_name(c.kind);
    if (c.is_finite()) j["count"] = c.count;
    out << j.dump() << '\n';
  } else {
    out << to_string(c) << '\n';
  }
  return 0;
}

int do_member(const Options& o, std::ostream& out) {
  const Nba a = load(o.file);
  out << (lasso_member(a, parse_lasso(a, o.lasso)) ? "true" : "false") << '\n';
  return 0;
}

int do_equiv(const Options& o, std::ostream& out) {
  const Nba a = load(o.file);
  const Nba b = load(o.second_file);
  const auto diff = lasso_equiv_sample(a, b, o.max_u, o.max_v);
  std::optional<std::string> literal;
  std::string accepted_by;
  if (diff) {
    const Nba wide = over_alphabet(a, union_alphabet(a, b));
    literal = format_lasso(wide, *diff);
    accepted_by = lasso_member(wide, *diff) ? "first" : "second";
  }
  if (o.json) {
    Json j;
    j["max_u"] = o.max_u;
    j["max_v"] = o.max_v;
    if (literal) {
      j["difference"] = *literal;
      j["accepted_by"] = accepted_by;
    } else {
      j["difference"] = nullptr;
    }
    out << j.dump() << '\n';
  } else if (literal) {
    out << "difference: " << *literal << " (accepted by the " << accepted_by
        << " automaton only)\n";
  } else {
    out << "no difference on lassos with |u| <= " << o.max_u
        << ", |v| <= " << o.max_v << '\n';
  }
  return 0;
}

int do_gen(const Options& o, std::ostream& out) {
  emit(serialize_automaton(random_nba(o.seed, o.states, o.letters, o.density,
                                      o.accept_frac)),
       o.output, out);
  return 0;
}

int do_trim(const Options& o, std::ostream& out) {
  emit(serialize_automaton(trim_nba(load(o.file))), o.output, out);
  return 0;
}

int do_hash_omega(const Options& o, std::ostream& out) {
  emit(serialize_automaton(omega_closure_hash(load(o.file), o.symbol)), o.output,
       out);
  return 0;
}

void report(std::ostream& err, std::string_view code, const std::string& detail) {
  err << "error: " << code << ": " << detail << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Ambiguity analysis and disambiguation of Buchi automata",
               "ambig"};
  app.set_version_flag("--version", std::string("ambig ") + kVersion);
  app.footer(kFileFormat);
  app.require_subcommand(1);

  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "Ambiguity class of a trim automaton");
  classify_cmd->add_option("FILE", o.file)->required();
  classify_cmd->add_flag("--trim-first", o.trim_first, "Trim before classifying");
  classify_cmd->add_flag("--json", o.json);

  auto* degree_cmd = app.add_subcommand("degree", "Finite degree of ambiguity");
  degree_cmd->add_option("FILE", o.file)->required();
  auto* exceeds_opt = degree_cmd->add_option("--exceeds", o.exceeds,
                                             "Decide whether the degree exceeds D");
  auto* exact_opt = degree_cmd->add_flag("--exact", o.exact, "Compute the exact degree");
  auto* max_opt = degree_cmd->add_option("--max", o.max_degree,
                                         "Largest degree tried by --exact");
  exceeds_opt->excludes(exact_opt);
  max_opt->needs(exact_opt);
  degree_cmd->add_flag("--json", o.json);

  auto* disamb_cmd = app.add_subcommand("disambiguate", "Finitely ambiguous equivalent");
  disamb_cmd->add_option("FILE", o.file)->required();
  disamb_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  disamb_cmd->add_flag("--trim", o.trim, "Trim the result");
  disamb_cmd->add_flag("--stats", o.stats, "Print size statistics as comments");

  auto* split_cmd = app.add_subcommand("splittree", "Levels of the split tree on a word");
  split_cmd->add_option("FILE", o.file)->required();
  split_cmd->add_option("--word", o.word)->required();
  split_cmd->add_option("--depth", o.depth, "Depth cap")->capture_default_str();
  split_cmd->add_flag("--reduced", o.reduced);

  auto* count_cmd = app.add_subcommand("count", "Accepting runs on a lasso word");
  count_cmd->add_option("FILE", o.file)->required();
  count_cmd->add_option("--lasso", o.lasso, "u:v")->required();
  count_cmd->add_flag("--json", o.json);

  auto* member_cmd = app.add_subcommand("member", "Membership of a lasso word");
  member_cmd->add_option("FILE", o.file)->required();
  member_cmd->add_option("--lasso", o.lasso, "u:v")->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Bounded lasso comparison");
  equiv_cmd->add_option("A", o.file)->required();
  equiv_cmd->add_option("B", o.second_file)->required();
  equiv_cmd->add_option("--max-u", o.max_u)->capture_default_str();
  equiv_cmd->add_option("--max-v", o.max_v)->capture_default_str();
  equiv_cmd->add_flag("--json", o.json);

  auto* gen_cmd = app.add_subcommand("gen", "Random automaton");
  gen_cmd->add_option("--seed", o.seed)->required();
  gen_cmd->add_option("--states", o.states)->capture_default_str()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--letters", o.letters)->capture_default_str()->check(CLI::Range(1, 26));
  gen_cmd->add_option("--density", o.density)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--accept-frac", o.accept_frac)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-o,--output", o.output);

  auto* trim_cmd = app.add_subcommand("trim", "Remove useless states");
  trim_cmd->add_option("FILE", o.file)->required();
  trim_cmd->add_option("-o,--output", o.output);

  auto* hash_cmd = app.add_subcommand("hash-omega", "Close finite words with a looping end marker");
  hash_cmd->add_option("FILE", o.file)->required();
  hash_cmd->add_option("-o,--output", o.output);
  hash_cmd->add_option("--symbol", o.symbol, "End marker symbol")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (degree_cmd->parsed() && !o.exact && !o.exceeds) {
      throw CLI::ValidationError("degree", "one of --exceeds or --exact is required");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream discard;
      app.exit(e, out, discard);
      return 0;
    }
    report(err, "USAGE", e.what());
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(o, out);
    if (degree_cmd->parsed()) return do_degree(o, out);
    if (disamb_cmd->parsed()) return do_disambiguate(o, out);
    if (split_cmd->parsed()) return do_splittree(o, out);
    if (count_cmd->parsed()) return do_count(o, out);
    if (member_cmd->parsed()) return do_member(o, out);
    if (equiv_cmd->parsed()) return do_equiv(o, out);
    if (gen_cmd->parsed()) return do_gen(o, out);
    if (trim_cmd->parsed()) return do_trim(o, out);
    if (hash_cmd->parsed()) return do_hash_omega(o, out);
  } catch (const IoError& e) {
    report(err, "IO_ERROR", e.detail);
    return 2;
  } catch (const ParseError& e) {
    report(err, error_code_name(e.code()), e.what());
    return 2;
  } catch (const Error& e) {
    report(err, error_code_name(e.code()), e.what());
    return e.code() == ErrorCode::InvalidArgument ? 2 : 1;
  }
  report(err, "USAGE", "no subcommand");
  return 2;
}

}  // namespace ambig::cli
