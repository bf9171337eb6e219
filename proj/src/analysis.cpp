#include "deon/analysis.hpp"

#include <algorithm>
#include <cassert>

#include "deon/alc.hpp"
#include "deon/errors.hpp"

namespace deon {

std::vector<Formula> tableau_formulas(const Problem& p) {
  std::vector<Formula> fs = p.background();
  for (const auto& n : p.all_norms()) fs.push_back(n);
  return fs;
}

namespace {

// A literal set has a world satisfying it iff no complementary pair, no
// two values of one partition, and no partition with every value denied.
bool literals_realizable(const std::vector<SignedLiteral>& lits,
                         const std::vector<Partition>& partitions) {
  for (const auto& l : lits)
    if (std::find(lits.begin(), lits.end(), l.complement()) != lits.end())
      return false;
  for (const auto& part : partitions) {
    int positive = 0;
    size_t denied = 0;
    for (const auto& v : part.values) {
      std::string atom = Partition::atom_name(part.site, v);
      for (const auto& l : lits) {
        if (l.atom.name != atom) continue;
        if (l.positive)
          ++positive;
        else
          ++denied;
      }
    }
    if (positive > 1) return false;
    if (positive == 0 && denied == part.values.size()) return false;
  }
  return true;
}

bool branch_realizable(const Branch& b, const Problem& p) {
  std::vector<ModalityId> modalities;
  for (const auto& x : b.boxed) modalities.push_back(x.modality);
  for (const auto& d : b.diamonds) modalities.push_back(d.modality);
  std::sort(modalities.begin(), modalities.end());
  modalities.erase(std::unique(modalities.begin(), modalities.end()),
                   modalities.end());
  for (const auto& m : modalities) {
    std::vector<SignedLiteral> bodies;
    for (const auto& x : b.boxed)
      if (x.modality == m) bodies.push_back(x.literal);
    if (!literals_realizable(bodies, p.partitions)) return false;
    for (const auto& d : b.diamonds) {
      if (!(d.modality == m)) continue;
      std::vector<SignedLiteral> with = bodies;
      with.push_back(d.literal);
      if (!literals_realizable(with, p.partitions)) return false;
    }
  }
  return true;
}

HyperOptions options_for(const Translation& t, const SolveLimits& limits) {
  HyperOptions o;
  o.modalities = t.modalities;
  o.roles = t.roles;
  o.max_individuals = limits.max_individuals;
  o.max_facts = limits.max_facts;
  return o;
}

HyperResult hyper_solve(const Problem& p, const std::vector<Formula>& extra,
                        const SolveLimits& limits) {
  Translation t = translate(p, extra);
  ClauseSet cs = clausify(t);
  return solve(cs, options_for(t, limits));
}

struct SatVerdict {
  bool satisfiable = false;
  std::optional<KripkeModel> model;
  std::vector<TraceStep> refutation;
};

SatVerdict decide(const Problem& p, const std::vector<Formula>& extra,
                  Engine e, const SolveLimits& limits) {
  if (e == Engine::tableau) return {tableau_satisfiable(p, extra), std::nullopt, {}};
  HyperResult h = hyper_solve(p, extra, limits);
  SatVerdict v{h.satisfiable, std::move(h.model), std::move(h.refutation)};
  if (e == Engine::both && tableau_eligible(p, extra)) {
    bool t = tableau_satisfiable(p, extra);
    if (t != v.satisfiable)
      throw EngineDisagreementError(
          std::string("tableau says ") + (t ? "satisfiable" : "unsatisfiable") +
          ", hypertableau says " + (v.satisfiable ? "satisfiable" : "unsatisfiable"));
  }
  return v;
}

// Diamond challenging the obligation box(m, l).
Formula challenge(const ModalityId& m, const SignedLiteral& l) {
  return nnf(Formula::negation(Formula::box(m, to_formula(l))));
}

std::vector<BoxedLiteral> norm_obligations(const Problem& p) {
  std::vector<BoxedLiteral> out;
  std::vector<Formula> stack = p.all_norms();
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    switch (f.kind()) {
      case Connective::Box:
        if (is_literal(f.child())) {
          BoxedLiteral b{f.modality(), to_signed_literal(f.child())};
          if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
          break;
        }
        stack.push_back(f.child());
        break;
      case Connective::Not:
      case Connective::Diamond:
        stack.push_back(f.child());
        break;
      case Connective::And:
      case Connective::Or:
      case Connective::Implies:
        stack.push_back(f.left());
        stack.push_back(f.right());
        break;
      default:
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool tableau_satisfiable(const Problem& p, const std::vector<Formula>& extra) {
  std::vector<Formula> fs = tableau_formulas(p);
  fs.insert(fs.end(), extra.begin(), extra.end());
  Tableau t = build_tableau(fs);
  for (const auto& b : t.branches)
    if (b.open && branch_realizable(b, p)) return true;
  return false;
}

bool tableau_eligible(const Problem& p, const std::vector<Formula>& extra) {
  std::vector<Formula> fs = tableau_formulas(p);
  fs.insert(fs.end(), extra.begin(), extra.end());
  try {
    for (const auto& f : fs) validate_boxed_literal_fragment(f);
  } catch (const Error&) {
    return false;
  }
  return true;
}

ConsistencyResult check_consistency(const Problem& p, Engine e,
                                    const SolveLimits& limits) {
  SatVerdict v = decide(p, {}, e, limits);
  return {v.satisfiable, std::move(v.model), std::move(v.refutation)};
}

TurnResult must_check(const Problem& p, const ModalityId& m,
                      const SignedLiteral& l, Engine e,
                      const SolveLimits& limits) {
  if (std::find(p.modalities.begin(), p.modalities.end(), m) == p.modalities.end())
    throw ValidationError("undeclared modality: " + m.label);
  SatVerdict base = decide(p, {}, e, limits);
  if (!base.satisfiable) return {Answer::Inconsistent, std::nullopt, {}};
  SatVerdict challenged = decide(p, {challenge(m, l)}, e, limits);
  if (!challenged.satisfiable)
    return {Answer::Yes, std::nullopt, std::move(challenged.refutation)};
  return {Answer::No, std::move(challenged.model), {}};
}

ModelReport find_model(const Problem& p, const std::optional<Formula>& goal,
                       Engine e, const SolveLimits& limits) {
  std::vector<Formula> extra;
  if (goal) extra.push_back(*goal);
  HyperResult h = hyper_solve(p, extra, limits);
  if (e == Engine::both && tableau_eligible(p, extra)) {
    bool t = tableau_satisfiable(p, extra);
    if (t != h.satisfiable)
      throw EngineDisagreementError(
          std::string("tableau says ") + (t ? "satisfiable" : "unsatisfiable") +
          ", hypertableau says " + (h.satisfiable ? "satisfiable" : "unsatisfiable"));
  }
  ModelReport r;
  if (!h.satisfiable) {
    r.answer = Answer::No;
    return r;
  }
  r.answer = Answer::Yes;
  r.model = std::move(h.model);
  for (const auto& ob : norm_obligations(p)) {
    Formula box = Formula::box(ob.modality, to_formula(ob.literal));
    if (!eval(*r.model, r.model->designated, box)) continue;
    r.obligations.push_back(ob);
    Formula body = to_formula(ob.literal);
    bool forced =
        !hyper_solve(p, {nnf(Formula::negation(body))}, limits).satisfiable;
    bool refuted = !hyper_solve(p, {body}, limits).satisfiable;
    if (!forced && !refuted) r.unverifiable.push_back(ob);
  }
  return r;
}

EntailsResult entails(const Problem& p, const Formula& f, Engine e,
                      const SolveLimits& limits) {
  SatVerdict v = decide(p, {nnf(Formula::negation(f))}, e, limits);
  if (v.satisfiable) return {Answer::No, std::move(v.model)};
  return {Answer::Yes, std::nullopt};
}

Tableau build_problem_tableau(const Problem& p) {
  return build_tableau(tableau_formulas(p));
}

CheatReport detect(const Problem& p) {
  return cheat_detect(build_problem_tableau(p));
}

}  // namespace deon
