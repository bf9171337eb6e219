#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deon/formula.hpp"
#include "deon/kripke.hpp"

namespace deon {

// Brute-force KD satisfiability by enumeration of every Kripke structure
// with serial relations. Deliberately independent of the tableau and
// hypertableau paths: it evaluates formulas directly over candidate
// structures and exists to check the engines, not to be fast.
struct OracleConfig {
  std::vector<std::string> atoms;       // valuation bit order
  std::vector<ModalityId> modalities;   // relation enumeration order
  int max_worlds = 3;

  static constexpr int kMaxWorldsGuard = 4;
  static constexpr int kMaxAtomsGuard = 6;
};

struct OracleResult {
  bool satisfiable = false;
  std::optional<KripkeModel> model;  // first hit in canonical order
  // Structures examined; exposed so tests can pin enumeration order.
  long long structures_checked = 0;
};

// Enumeration order: world count ascending; per count, valuations as one
// binary counter (world-major, atom-minor bits) ascending; per valuation,
// one serial adjacency bitmask per modality, ascending, later modalities
// innermost. The designated world is 0. Throws GuardExceededError when the
// instance exceeds the guards.
OracleResult oracle_sat(std::span<const Formula> formulas, const OracleConfig& cfg);

}  // namespace deon
