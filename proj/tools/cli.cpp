// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "sufficere/decide_dollar.hpp"
#include "sufficere/decide_general.hpp"
#include "sufficere/oracle.hpp"
#include "sufficere/stg.hpp"
#include "sufficere/suffix_tree.hpp"
#include "sufficere/tree.hpp"

namespace sufficere::cli {
namespace {

// Bad input: the message goes to stderr and the exit status is 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AnnotatedTree load_tree(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    text = read_all(file);
  }
  try {
    return parse_tree(text);
  } catch (const TreeError& e) {
    std::string where = path.empty() || path == "-" ? "<stdin>" : path;
    if (e.line() > 0) {
      where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
    }
    throw InputError(where + ": " + std::string(error_code_name(e.code())) +
                     ": " + e.what());
  }
}

std::int64_t default_oracle_cap() {
  const char* env = std::getenv("SUFFICERE_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return OracleOptions{}.step_cap;
  try {
    std::size_t used = 0;
    const std::int64_t cap = std::stoll(env, &used);
    if (used != std::string(env).size() || cap <= 0) throw std::out_of_range("");
    return cap;
  } catch (const std::logic_error&) {
    throw InputError("SUFFICERE_ORACLE_CAP must be a positive integer");
  }
}

int report_no(std::ostream& err, std::string_view code) {
  err << "reason=" << code << '\n';
  return kExitNo;
}

struct BuildArgs {
  std::string text;
  bool dollar = false;
  bool online = false;
};

int run_build(const BuildArgs& a, std::ostream& out) {
  try {
    const SuffixTree st = a.online ? build_suffix_tree_online(a.text, a.dollar)
                                   : build_suffix_tree(a.text, a.dollar);
    out << serialize_tree(to_annotated(st));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kExitYes;
}

struct DecideArgs {
  std::string file;
  bool dollar = false;
  bool trace = false;
  bool no_verify = false;
};

int run_decide(const DecideArgs& a, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const AnnotatedTree tree = load_tree(a.file, in);
  const Verdict v =
      a.dollar ? decide_dollar(tree, DollarOptions{!a.no_verify})
               : decide_suffix_tree(tree, DecideOptions{!a.no_verify, a.trace});
  if (a.trace) {
    for (const LocationTrace& e : v.trace) {
      err << "trace " << to_string(e.location) << ' ' << stage_name(e.stage)
          << '\n';
    }
    if (v.location) err << "location=" << to_string(*v.location) << '\n';
  }
  if (!v.is_suffix_tree) return report_no(err, reason_code(*v.reason));
  out << v.realizer << '\n';
  return kExitYes;
}

struct StgArgs {
  std::string file;
  bool dot = false;
  bool values = false;
};

int run_stg(const StgArgs& a, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const AnnotatedTree tree = load_tree(a.file, in);
  const LDValues ld = compute_ld(tree);
  const bool values = a.values || !a.dot;
  if (values) out << format_ld_table(tree, ld);
  if (!a.dot) return kExitYes;
  try {
    out << to_dot(build_stg(tree, ld), tree);
  } catch (const NoMatchingChild& e) {
    err << e.what() << '\n';
    return report_no(err, reason_code(Reason::kPreconditionP2));
  }
  return kExitYes;
}

struct OracleArgs {
  std::string file;
  std::optional<std::int64_t> max_len;
  std::optional<std::int64_t> min_len;
  std::optional<std::int64_t> cap;
};

int run_oracle(const OracleArgs& a, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const AnnotatedTree tree = load_tree(a.file, in);
  OracleOptions options;
  options.max_len = a.max_len;
  options.min_len = a.min_len;
  options.step_cap = a.cap ? *a.cap : default_oracle_cap();
  std::optional<std::string> s;
  try {
    s = oracle_decide(tree, options);
  } catch (const OracleBudgetExceeded& e) {
    err << e.what() << '\n' << "reason=BUDGET_EXCEEDED\n";
    return kExitInputError;
  }
  if (!s) return report_no(err, "NO_REALIZER");
  out << *s << '\n';
  return kExitYes;
}

struct VerifyArgs {
  std::string file;
  std::string text;
};

int run_verify(const VerifyArgs& a, std::istream& in, std::ostream& err) {
  const AnnotatedTree tree = load_tree(a.file, in);
  if (!realizes(a.text, tree)) return report_no(err, "NOT_REALIZED");
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether an annotated tree is a suffix tree.",
               "sufficere"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand(
      "build", "Print the suffix tree of a string in tree format");
  build_cmd->add_option("string", build.text, "Input string")->required();
  build_cmd->add_flag("--dollar", build.dollar, "Append the '$' terminator");
  build_cmd->add_flag("--online", build.online,
                      "Use linear-time online construction");

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand(
      "decide", "Print a realizing string, or the reason there is none");
  decide_cmd->add_option("file", decide.file, "Tree file, '-' for stdin");
  decide_cmd->add_flag("--dollar", decide.dollar,
                       "Decide whether the tree is a '$'-suffix tree");
  decide_cmd->add_flag("--trace", decide.trace,
                       "Print the fate of every candidate location");
  decide_cmd->add_flag("--no-verify", decide.no_verify,
                       "Skip rebuilding the tree from the answer");

  StgArgs stg;
  auto* stg_cmd =
      app.add_subcommand("stg", "Print l/d values and the suffix tour graph");
  stg_cmd->add_option("file", stg.file, "Tree file, '-' for stdin");
  stg_cmd->add_flag("--dot", stg.dot, "Print the graph in Graphviz format");
  stg_cmd->add_flag("--values", stg.values,
                    "Print the l/d table (default without --dot)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Find the shortest, then smallest, realizer by search");
  oracle_cmd->add_option("file", oracle.file, "Tree file, '-' for stdin");
  oracle_cmd->add_option("--max-len", oracle.max_len,
                         "Longest candidate (default n-1)")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--min-len", oracle.min_len,
                         "Shortest candidate (default: number of leaves)")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--cap", oracle.cap,
                         "Maximum number of candidates "
                         "(default $SUFFICERE_ORACLE_CAP or 20000000)")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check that a string realizes a tree");
  verify_cmd->add_option("file", verify.file, "Tree file, '-' for stdin")
      ->required();
  verify_cmd->add_option("string", verify.text, "Candidate string")
      ->required();

  const auto help_text = [&app] {
    const auto parsed = app.get_subcommands();
    return parsed.empty() ? app.help() : parsed.front()->help();
  };
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << help_text();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << help_text();
    return kExitInputError;
  }

  try {
    if (*build_cmd) return run_build(build, out);
    if (*decide_cmd) return run_decide(decide, in, out, err);
    if (*stg_cmd) return run_stg(stg, in, out, err);
    if (*oracle_cmd) return run_oracle(oracle, in, out, err);
    if (*verify_cmd) return run_verify(verify, in, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sufficere::cli
