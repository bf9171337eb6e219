#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "deon/cli.hpp"

namespace {

// Shared options every subcommand accepts.
struct CommonOpts {
  std::string engine = "both";
  std::string output = "text";
  bool contrapose = false;
  bool tbox_constraints = false;
  int max_individuals = 10000;
  long long max_facts = 100000;
  int oracle_max_worlds = 3;
  bool engine_given = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--engine", o.engine, "tableau, hyper, or both")
      ->check(CLI::IsMember({"tableau", "hyper", "both"}));
  cmd->add_option("--output", o.output, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_flag("--contrapose", o.contrapose,
                "derive pseudo-contrapositives of literal norms");
  cmd->add_flag("--tbox-constraints", o.tbox_constraints,
                "carry partition axioms in the TBox instead of duplicating them");
  cmd->add_option("--max-individuals", o.max_individuals,
                  "hypertableau individual budget");
  cmd->add_option("--max-facts", o.max_facts, "hypertableau fact budget");
  cmd->add_option("--max-worlds", o.oracle_max_worlds,
                  "oracle enumeration world bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deontic-logic reasoning over .norm files"};
  app.require_subcommand(1);

  std::map<std::string, deon::cli::Command> commands{
      {"check", deon::cli::Command::check},
      {"turn", deon::cli::Command::turn},
      {"obligations", deon::cli::Command::obligations},
      {"model", deon::cli::Command::model},
      {"tableau", deon::cli::Command::tableau},
      {"translate", deon::cli::Command::translate},
      {"oracle", deon::cli::Command::oracle},
  };
  std::map<std::string, std::string> descriptions{
      {"check", "normative-system consistency"},
      {"turn", "must an obligation be verified"},
      {"obligations", "violation-detection report over the tableau"},
      {"model", "find a model, optionally containing a goal"},
      {"tableau", "render the tableau for the knowledge base"},
      {"translate", "description-logic concepts and clauses"},
      {"oracle", "brute-force satisfiability over small structures"},
  };

  struct SubState {
    CommonOpts common;
    std::string input;
    std::string formula;
    CLI::App* cmd = nullptr;
  };
  std::map<std::string, SubState> subs;
  for (const auto& [name, command] : commands) {
    (void)command;
    SubState& st = subs[name];
    st.cmd = app.add_subcommand(name, descriptions[name]);
    st.cmd->add_option("input", st.input, ".norm file")->required();
    if (name == "turn")
      st.cmd->add_option("formula", st.formula, "obligation literal");
    if (name == "model") st.cmd->add_option("goal", st.formula, "goal formula");
    add_common(st.cmd, st.common);
  }

  CLI11_PARSE(app, argc, argv);

  for (auto& [name, st] : subs) {
    if (!st.cmd->parsed()) continue;
    deon::cli::RunConfig cfg;
    cfg.command = commands[name];
    cfg.input_path = st.input;
    if (!st.formula.empty()) cfg.formula = st.formula;
    if (st.cmd->count("--engine") > 0) {
      if (st.common.engine == "tableau") cfg.engine = deon::Engine::tableau;
      if (st.common.engine == "hyper") cfg.engine = deon::Engine::hyper;
      if (st.common.engine == "both") cfg.engine = deon::Engine::both;
    }
    cfg.output = st.common.output == "structured"
                     ? deon::cli::OutputMode::structured
                     : deon::cli::OutputMode::text;
    cfg.contrapose = st.common.contrapose;
    cfg.tbox_constraints = st.common.tbox_constraints;
    cfg.max_individuals = st.common.max_individuals;
    cfg.max_facts = st.common.max_facts;
    cfg.oracle_max_worlds = st.common.oracle_max_worlds;
    return deon::cli::run(cfg, std::cout, std::cerr);
  }
  return 2;
}
