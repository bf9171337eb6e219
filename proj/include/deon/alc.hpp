#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "deon/formula.hpp"
#include "deon/problem.hpp"

namespace deon {

enum class ConceptKind : uint8_t { Top, Bottom, Name, Not, And, Or, All, Some };

// Immutable description-logic concept with shared structure.
class Concept {
 public:
  static Concept top();
  static Concept bottom();
  static Concept name(std::string n);
  static Concept negation(Concept c);
  static Concept conjunction(Concept l, Concept r);
  static Concept disjunction(Concept l, Concept r);
  static Concept all(std::string role, Concept c);
  static Concept some(std::string role, Concept c);

  ConceptKind kind() const { return node_->kind; }
  const std::string& name_str() const;  // pre: Name
  const std::string& role() const;      // pre: All or Some
  Concept child() const;                // pre: Not, All, Some
  Concept left() const;                 // pre: And, Or
  Concept right() const;                // pre: And, Or

  bool operator==(const Concept& o) const;

 private:
  struct Node {
    ConceptKind kind;
    std::string name;  // Name
    std::string role;  // All, Some
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Concept& c);

// "r" for the default modality, "r_<label>" otherwise.
std::string role_name(const ModalityId& m);

// Structural translation of a modal formula into a concept: atoms become
// concept names, boxes become value restrictions, diamonds existential
// restrictions; implications are rewritten as disjunctions first.
Concept phi(const Formula& f);

Concept concept_nnf(const Concept& c);

struct Translation {
  // Concepts the named world must satisfy, in order: observations,
  // partition axioms, partition axioms duplicated under each box (only
  // when the TBox does not carry them), facts, norms, extras.
  std::vector<Concept> world_concepts;
  // Axioms true [= C: seriality per modality first, then partition axioms
  // when the problem puts them in the TBox.
  std::vector<Concept> tbox;
  std::vector<ModalityId> modalities;
  std::vector<std::string> roles;  // one per modality, same order
};

Translation translate(const Problem& p);
Translation translate(const Problem& p, const std::vector<Formula>& extra);

std::string to_string(const Translation& t);

struct ClauseAtom {
  enum class Kind { Concept, Role, Exists };
  Kind kind = Kind::Concept;
  std::string name;    // concept name, or role name for Role/Exists
  std::string filler;  // Exists only: atomic filler, "true" for the top concept
  int term = 0;        // variable index: 0 = x, 1 = y, 2 = y2, ...
  int to = 0;          // Role only: target variable index

  bool operator==(const ClauseAtom&) const = default;
};

// Horn-style rule over unary and binary atoms; body conjunction implies
// head disjunction. Empty head means the body is contradictory.
struct DLClause {
  std::vector<ClauseAtom> body;
  std::vector<ClauseAtom> head;

  bool operator==(const DLClause&) const = default;
};

struct ClauseSet {
  std::vector<DLClause> clauses;
  // Concept names asserted at the named individual a0.
  std::vector<std::string> assertions;
  // Introduced definition names, each standing for a source concept.
  std::map<std::string, Concept> name_table;
  std::vector<std::string> roles;
};

// Structural transformation to clauses. Fresh names Q0, Q1, ... stand for
// non-atomic pieces; every definition is one-directional (name implies
// definition), and equal pieces reuse one name.
ClauseSet clausify(const Translation& t);

std::string to_string(const ClauseAtom& a);
std::string to_string(const DLClause& c);

}  // namespace deon
