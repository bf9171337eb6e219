#pragma once

#include <optional>
#include <vector>

#include "deon/hyper.hpp"
#include "deon/kripke.hpp"
#include "deon/problem.hpp"
#include "deon/tableau.hpp"

namespace deon {

enum class Answer { Yes, No, Inconsistent };

struct SolveLimits {
  int max_individuals = 10000;
  long long max_facts = 100000;
};

struct ConsistencyResult {
  bool consistent = false;
  std::optional<KripkeModel> model;  // witness when consistent
  std::vector<TraceStep> refutation;  // first closed derivation when not
};

struct TurnResult {
  Answer answer = Answer::No;
  // No: the norms hold somewhere the challenged obligation fails.
  std::optional<KripkeModel> countermodel;
  // Yes: how the challenged knowledge base closes.
  std::vector<TraceStep> refutation;
};

struct ModelReport {
  Answer answer = Answer::No;
  std::optional<KripkeModel> model;
  // Obligations stated by the norms that hold at the observed world.
  std::vector<BoxedLiteral> obligations;
  // Obligations whose body the knowledge base neither forces nor refutes
  // at the observed world: they cannot be checked, only ought to be.
  std::vector<BoxedLiteral> unverifiable;
};

struct EntailsResult {
  Answer answer = Answer::No;
  std::optional<KripkeModel> countermodel;
};

// Formulas the tableau reading works from: observations, partition axioms,
// facts, then norms (derived ones included).
std::vector<Formula> tableau_formulas(const Problem& p);

// KD-satisfiability on the boxed-literal fragment: some open branch whose
// box sets (extended by each diamond in turn) are realizable under the
// partition constraints.
bool tableau_satisfiable(const Problem& p, const std::vector<Formula>& extra);

// True when every formula the tableau reading would see stays inside the
// boxed-literal fragment.
bool tableau_eligible(const Problem& p, const std::vector<Formula>& extra);

ConsistencyResult check_consistency(const Problem& p, Engine e,
                                    const SolveLimits& limits = {});

// Must the obligation box(m, l) be verified: Yes when the knowledge base
// is satisfiable but refuses every world violating the obligation.
TurnResult must_check(const Problem& p, const ModalityId& m,
                      const SignedLiteral& l, Engine e,
                      const SolveLimits& limits = {});

// Model search for the knowledge base plus an optional goal; the model and
// its obligation report come from the clausal engine, the tableau engine
// cross-checks satisfiability when asked and eligible.
ModelReport find_model(const Problem& p, const std::optional<Formula>& goal,
                       Engine e, const SolveLimits& limits = {});

EntailsResult entails(const Problem& p, const Formula& f, Engine e,
                      const SolveLimits& limits = {});

Tableau build_problem_tableau(const Problem& p);

// Violation detection over the problem's tableau.
CheatReport detect(const Problem& p);

}  // namespace deon
