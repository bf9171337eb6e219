#include "deon/problem.hpp"

#include <algorithm>
#include <set>

#include "deon/errors.hpp"

namespace deon {

namespace {

void collect_usage(const Formula& f, std::set<std::string>& atoms,
                   std::set<std::string>& modalities) {
  switch (f.kind()) {
    case Connective::Top:
    case Connective::Bottom:
      return;
    case Connective::Atom:
      atoms.insert(f.atom_id().name);
      return;
    case Connective::Not:
      collect_usage(f.child(), atoms, modalities);
      return;
    case Connective::Box:
    case Connective::Diamond:
      modalities.insert(f.modality().label);
      collect_usage(f.child(), atoms, modalities);
      return;
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      collect_usage(f.left(), atoms, modalities);
      collect_usage(f.right(), atoms, modalities);
      return;
  }
}

}  // namespace

void Problem::finalize() {
  std::set<std::string> sites;
  for (const auto& p : partitions) {
    if (!sites.insert(p.site).second)
      throw ValidationError("duplicate partition site: " + p.site);
    if (p.values.size() < 2)
      throw ValidationError("partition " + p.site + " needs at least two values");
    std::set<std::string> vals(p.values.begin(), p.values.end());
    if (vals.size() != p.values.size())
      throw ValidationError("partition " + p.site + " has duplicate values");
  }

  std::set<std::string> atom_set;
  for (const auto& name : atom_names())
    if (!atom_set.insert(name).second)
      throw ValidationError("duplicate atom declaration: " + name);

  std::set<std::string> used_atoms;
  std::set<std::string> used_modalities;
  for (const auto& f : facts) collect_usage(f, used_atoms, used_modalities);
  for (const auto& f : observations) collect_usage(f, used_atoms, used_modalities);
  for (const auto& f : norms) collect_usage(f, used_atoms, used_modalities);
  for (const auto& q : queries)
    if (q.formula) collect_usage(*q.formula, used_atoms, used_modalities);

  for (const auto& a : used_atoms)
    if (!atom_set.count(a)) throw ValidationError("undeclared atom: " + a);

  std::set<std::string> declared_modalities;
  for (const auto& m : modalities) declared_modalities.insert(m.label);
  for (const auto& q : queries)
    if (q.kind == Query::Kind::must_check) used_modalities.insert(q.modality.label);
  for (const auto& m : used_modalities) {
    if (declared_modalities.count(m)) continue;
    if (m == kDefaultModality.label) {
      modalities.push_back(kDefaultModality);
      declared_modalities.insert(m);
      continue;
    }
    throw ValidationError("undeclared modality: " + m);
  }

  for (const auto& obs : observations)
    if (!is_literal(obs))
      throw ValidationError("observation must be a literal: " + to_string(obs));

  derived_norms.clear();
  if (contrapose) {
    for (const auto& n : norms) {
      try {
        derived_norms.push_back(derive_pseudo_contrapositive(n, partitions));
      } catch (const ShapeError&) {
        // Only literal-conditional norms have a pseudo-contrapositive.
      }
    }
  }
}

std::vector<std::string> Problem::atom_names() const {
  std::vector<std::string> out;
  for (const auto& p : partitions)
    for (const auto& name : p.atom_names()) out.push_back(name);
  for (const auto& a : declared_atoms) out.push_back(a);
  return out;
}

bool Problem::has_atom(const std::string& name) const {
  const auto names = atom_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Formula> Problem::partition_axioms() const {
  std::vector<Formula> out;
  for (const auto& p : partitions) {
    const auto names = p.atom_names();
    Formula exhaustive = Formula::atom(names[0]);
    for (std::size_t i = 1; i < names.size(); ++i)
      exhaustive = Formula::disjunction(exhaustive, Formula::atom(names[i]));
    out.push_back(Formula::implication(Formula::top(), exhaustive));
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        out.push_back(Formula::implication(
            Formula::conjunction(Formula::atom(names[i]), Formula::atom(names[j])),
            Formula::bottom()));
  }
  return out;
}

std::vector<Formula> Problem::background() const {
  std::vector<Formula> out = observations;
  for (const auto& f : partition_axioms()) out.push_back(f);
  for (const auto& f : facts) out.push_back(f);
  return out;
}

std::vector<Formula> Problem::all_norms() const {
  std::vector<Formula> out = norms;
  for (const auto& f : derived_norms) out.push_back(f);
  return out;
}

std::vector<Formula> Problem::all_formulas() const {
  std::vector<Formula> out = background();
  for (const auto& f : all_norms()) out.push_back(f);
  return out;
}

bool Problem::operator==(const Problem& other) const {
  return modalities == other.modalities && partitions == other.partitions &&
         declared_atoms == other.declared_atoms && facts == other.facts &&
         observations == other.observations && norms == other.norms &&
         queries == other.queries && contrapose == other.contrapose &&
         tbox_constraints == other.tbox_constraints;
}

}  // namespace deon
