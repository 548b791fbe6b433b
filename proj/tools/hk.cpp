// Command-line front end: enumerate Hecke-Kiselman monoids, verify the
// counting theorems, and probe the weighted matrix representations.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hk/cli.hpp"

namespace {

void add_common(CLI::App* cmd, hk::JobConfig& cfg) {
  cmd->add_option("--graph", cfg.graph_file, "graph file (text or DOT subset)");
  cmd->add_option("--builder", cfg.builder,
                  "built-in family: chain:N, alt:N, zn:N, orient:N:MASK, "
                  "triangle, abc, unoriented2, isolated:N");
  cmd->add_option("--cap", cfg.cap, "element cap (HK_CAP env overrides default)");
  cmd->add_option("--max-rules", cfg.limits.max_rules, "completion rule cap");
  cmd->add_option("--max-rule-len", cfg.limits.max_rule_len,
                  "completion rule length cap");
  cmd->add_option("--priority", cfg.priority,
                  "shortlex vertex priority, comma-separated");
  cmd->add_option("--format", cfg.format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--jobs", cfg.jobs, "parallel verification jobs");
}

void add_weights(CLI::App* cmd, hk::JobConfig& cfg) {
  cmd->add_option("--weights", cfg.weights, "edge weights, e.g. a>b=2,b>c=-1");
  cmd->add_option("--weights-const", cfg.weights_const, "constant weight")
      ->each([&cfg](const std::string&) { cfg.weights_const_set = true; });
  cmd->add_flag("--allow-zero", cfg.allow_zero,
                "permit zero weights (unoriented-edge testing mode)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hk: exact computations in Hecke-Kiselman monoids of digraphs"};
  app.require_subcommand(1);

  hk::JobConfig cfg;
  cfg.cap = hk::default_cap();

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "enumerate elements and normal forms");
  add_common(enumerate, cfg);

  std::string suite;
  CLI::App* verify = app.add_subcommand(
      "verify", "verify a counting theorem against brute-force enumeration");
  verify->add_option("suite", suite,
                     "catalan | fibonacci | product | idempotents | mf | "
                     "reversal | formula")
      ->required()
      ->check(CLI::IsMember({"catalan", "fibonacci", "product", "idempotents",
                             "mf", "reversal", "formula"}));
  verify->add_option("--max-n", cfg.max_n, "largest n in the family sweep");
  verify->add_flag("--all-orientations", cfg.all_orientations,
                   "sweep every orientation of the path");
  add_common(verify, cfg);

  std::string action;
  CLI::App* rep = app.add_subcommand("rep", "weighted matrix representations");
  rep->add_option("action", action,
                  "matrix | check-effective | check-zn | check-cycle")
      ->required()
      ->check(CLI::IsMember(
          {"matrix", "check-effective", "check-zn", "check-cycle"}));
  rep->add_option("--word", cfg.word, "word over the vertex labels");
  rep->add_option("--n", cfg.n, "Z_n size for check-zn");
  rep->add_option("--kmax", cfg.kmax, "power bound for check-cycle");
  add_weights(rep, cfg);
  add_common(rep, cfg);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "normal form, multiplicity-free reduction, content");
  reduce->add_option("--word", cfg.word, "word over the vertex labels")
      ->required();
  add_common(reduce, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hk::kExitInput;
  }

  try {
    if (app.got_subcommand(enumerate)) return hk::cmd_enumerate(cfg, std::cout);
    if (app.got_subcommand(verify)) return hk::cmd_verify(cfg, suite, std::cout);
    if (app.got_subcommand(rep)) return hk::cmd_rep(cfg, action, std::cout);
    if (app.got_subcommand(reduce)) return hk::cmd_reduce(cfg, std::cout);
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hk::exit_code_for(e.code());
  }
  return hk::kExitInput;
}
