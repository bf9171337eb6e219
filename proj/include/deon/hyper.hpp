#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deon/alc.hpp"
#include "deon/kripke.hpp"

namespace deon {

struct HyperOptions {
  int max_individuals = 10000;
  long long max_facts = 100000;
  // Parallel lists pairing each modality with its role name.
  std::vector<ModalityId> modalities;
  std::vector<std::string> roles;
};

// One derivation step: a clause instance whose head was applied, or a
// successor introduction for an existential.
struct TraceStep {
  int clause = -1;  // index into ClauseSet::clauses, -1 for successor steps
  std::vector<int> binding;
  int chosen_head = -1;
  std::string note;
};

struct HyperResult {
  bool satisfiable = false;
  std::optional<KripkeModel> model;
  // Derivation path of the first branch that closed (empty when satisfiable).
  std::vector<TraceStep> refutation;
  int individuals_created = 0;
  long long facts_added = 0;
  int branches_explored = 1;
  int max_individuals_in_branch = 0;
};

// Saturates the clause set from the named individual's assertions,
// branching on disjunctive heads and reusing structurally equal
// individuals instead of expanding them (their incoming edges are
// redirected to the retained twin in the extracted model). Throws
// ResourceLimitError when the limits are exceeded.
HyperResult solve(const ClauseSet& cs, const HyperOptions& opt);

// Semantic validation: every clause instance holds at every world, every
// assertion holds at the designated world, and every world has a successor
// for every modality. Defined names are evaluated through their source
// concepts, so models from any engine can be checked.
bool model_check(const KripkeModel& m, const ClauseSet& cs,
                 const HyperOptions& opt, std::string* why = nullptr);

}  // namespace deon
