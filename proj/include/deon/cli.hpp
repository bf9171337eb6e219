#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "deon/problem.hpp"

namespace deon::cli {

enum class Command { check, turn, obligations, model, tableau, translate, oracle };
enum class OutputMode { text, structured };

struct RunConfig {
  Command command = Command::check;
  std::string input_path;
  // Formula argument (turn requires one, model takes an optional goal);
  // when absent, the input file's first query of the matching kind is used.
  std::optional<std::string> formula;
  std::optional<Engine> engine;  // explicit selector wins over the file's
  OutputMode output = OutputMode::text;
  bool contrapose = false;
  bool tbox_constraints = false;
  int max_individuals = 10000;
  long long max_facts = 100000;
  int oracle_max_worlds = 3;
};

// Exit status: 0 Yes/Sat/consistent, 1 No/Unsat/inconsistent, 2 usage or
// input error, 3 resource or enumeration limit, 4 engine disagreement.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace deon::cli
