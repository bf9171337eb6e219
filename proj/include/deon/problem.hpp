#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deon/formula.hpp"
#include "deon/partition.hpp"

namespace deon {

enum class Engine { tableau, hyper, both };

struct Query {
  enum class Kind { consistency, must_check, obligations, find_model, entails };
  Kind kind = Kind::consistency;
  std::optional<Formula> formula;          // must_check / entails / optional find_model goal
  ModalityId modality = kDefaultModality;  // must_check only
  std::optional<Engine> engine;

  bool operator==(const Query&) const = default;
};

// A normative system: declarations, background knowledge B (facts and
// observations), norms N, plus queries and options from the source text.
struct Problem {
  std::vector<ModalityId> modalities;
  std::vector<Partition> partitions;
  std::vector<std::string> declared_atoms;  // explicit `atom` statements only
  std::vector<Formula> facts;
  std::vector<Formula> observations;  // literals, kept apart from facts
  std::vector<Formula> norms;         // as written in the source
  std::vector<Query> queries;
  bool contrapose = false;
  bool tbox_constraints = false;

  // Filled by finalize(); excluded from equality (deterministic function of
  // the source fields).
  std::vector<Formula> derived_norms;

  // Validates declarations, auto-declares the default modality when some
  // formula uses an unlabeled operator, and derives pseudo-contrapositives
  // of literal-conditional norms when the contrapose option is set.
  void finalize();

  // Partition-generated atoms (declaration order, then value order)
  // followed by explicitly declared ones.
  std::vector<std::string> atom_names() const;
  bool has_atom(const std::string& name) const;

  // Exhaustiveness and pairwise-exclusivity axioms, per partition:
  // true -> v1 | ... | vn and vi & vj -> false.
  std::vector<Formula> partition_axioms() const;

  // B in evaluation order: observations first (so they head every tableau
  // branch), then partition axioms, then facts.
  std::vector<Formula> background() const;

  // Source norms followed by derived pseudo-contrapositives.
  std::vector<Formula> all_norms() const;

  // background() + all_norms().
  std::vector<Formula> all_formulas() const;

  bool operator==(const Problem& other) const;
};

}  // namespace deon
