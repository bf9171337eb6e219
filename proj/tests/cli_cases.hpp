#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deon/cli.hpp"

namespace deon::test {

// One CLI invocation pinned by a golden file. Shared by the unit suite
// (byte comparison, regeneration) and the acceptance run (determinism).
struct CliGoldenCase {
  std::string golden;
  cli::Command command;
  std::string scenario;
  int want_exit = 0;
  std::optional<std::string> formula;
  cli::OutputMode output = cli::OutputMode::text;
};

inline const std::vector<CliGoldenCase>& cli_golden_cases() {
  static const std::vector<CliGoldenCase> cases = {
      {"obligations_wst_naive_a.txt", cli::Command::obligations,
       "wst_naive_observe_a.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_wst_naive_7.txt", cli::Command::obligations,
       "wst_naive_observe_7.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_wst_contraposed_7.txt", cli::Command::obligations,
       "wst_contraposed_observe_7.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_social.txt", cli::Command::obligations,
       "social_contract.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_social_under_21.txt", cli::Command::obligations,
       "social_contract_under_21.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_social_drink_beer.txt", cli::Command::obligations,
       "social_contract_drink_beer.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_social_of_age.txt", cli::Command::obligations,
       "social_contract_of_age.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_precaution.txt", cli::Command::obligations,
       "precaution.norm", 0, std::nullopt, cli::OutputMode::text},
      {"obligations_wst_contraposed_7.json", cli::Command::obligations,
       "wst_contraposed_observe_7.norm", 0, std::nullopt,
       cli::OutputMode::structured},
      {"turn_wst_contraposed_7.txt", cli::Command::turn,
       "wst_contraposed_observe_7.norm", 0, std::string("c(l,K)"),
       cli::OutputMode::text},
      {"turn_wst_naive_7.txt", cli::Command::turn, "wst_naive_observe_7.norm",
       1, std::string("c(l,K)"), cli::OutputMode::text},
      {"turn_precaution_sc.txt", cli::Command::turn, "precaution.norm", 0,
       std::string("O[sc] wears_badge"), cli::OutputMode::text},
      {"check_chisholm.txt", cli::Command::check, "chisholm.norm", 1,
       std::nullopt, cli::OutputMode::text},
      {"check_social.txt", cli::Command::check, "social_contract.norm", 0,
       std::nullopt, cli::OutputMode::text},
      {"check_chisholm.json", cli::Command::check, "chisholm.norm", 1,
       std::nullopt, cli::OutputMode::structured},
      {"model_suppression.txt", cli::Command::model, "suppression.norm", 0,
       std::nullopt, cli::OutputMode::text},
      {"model_suppression.json", cli::Command::model, "suppression.norm", 0,
       std::nullopt, cli::OutputMode::structured},
      {"tableau_social.txt", cli::Command::tableau, "social_contract.norm", 0,
       std::nullopt, cli::OutputMode::text},
      {"tableau_wst_naive_a.json", cli::Command::tableau,
       "wst_naive_observe_a.norm", 0, std::nullopt, cli::OutputMode::structured},
      {"translate_chisholm.txt", cli::Command::translate, "chisholm.norm", 0,
       std::nullopt, cli::OutputMode::text},
      {"translate_wst_contraposed_7.txt", cli::Command::translate,
       "wst_contraposed_observe_7.norm", 0, std::nullopt, cli::OutputMode::text},
      {"oracle_social_under_21.txt", cli::Command::oracle,
       "social_contract_under_21.norm", 0, std::nullopt, cli::OutputMode::text},
      {"oracle_chisholm.txt", cli::Command::oracle, "chisholm.norm", 1,
       std::nullopt, cli::OutputMode::text},
  };
  return cases;
}

}  // namespace deon::test
