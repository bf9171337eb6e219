#pragma once

#include <memory>
#include <string>
#include <vector>

#include "deon/formula.hpp"

namespace deon {

struct SignedLiteral {
  bool positive = true;
  AtomId atom;

  SignedLiteral complement() const { return {!positive, atom}; }
  auto operator<=>(const SignedLiteral& o) const {
    if (auto c = atom <=> o.atom; c != 0) return c;
    // positive before negative
    return (positive ? 0 : 1) <=> (o.positive ? 0 : 1);
  }
  bool operator==(const SignedLiteral&) const = default;
};

// A modal operator over a literal, treated as an unexpandable literal by
// the tableau. Used for both boxes and diamonds (the owning container
// decides which).
struct BoxedLiteral {
  ModalityId modality;
  SignedLiteral literal;

  auto operator<=>(const BoxedLiteral& o) const {
    if (auto c = modality <=> o.modality; c != 0) return c;
    return literal <=> o.literal;
  }
  bool operator==(const BoxedLiteral&) const = default;
};

std::string to_string(const SignedLiteral& l);
std::string to_string(const BoxedLiteral& l, bool diamond = false);
SignedLiteral to_signed_literal(const Formula& f);  // pre: is_literal(f)
Formula to_formula(const SignedLiteral& l);

struct Branch {
  std::vector<SignedLiteral> literals;  // insertion order, duplicate-free
  std::vector<BoxedLiteral> boxed;
  std::vector<BoxedLiteral> diamonds;
  bool open = false;
  int leaf = -1;  // tree node this branch ends at
  // Input formulas, shared by all branches; self_loop_check re-runs the
  // tableau against them.
  std::shared_ptr<const std::vector<Formula>> source;

  bool has_literal(const SignedLiteral& l) const;
};

struct TableauNode {
  std::string label;
  int parent = -1;
  std::vector<int> children;
  bool closes = false;  // node that closed its branch
};

struct Tableau {
  std::vector<TableauNode> nodes;  // node 0 is a synthetic root
  std::vector<Branch> branches;    // depth-first, left to right
  std::shared_ptr<const std::vector<Formula>> formulas;

  int open_count() const;
};

// Expands formulas in input order (left fork = first disjunct / negated
// antecedent). Boxes and diamonds over literals land in the branch's boxed
// and diamond sets and are never expanded. `X -> false` acts as a closure
// constraint when X is a (conjunction of) literal(s): it closes exactly the
// branches containing all of X. Throws NestedModalityError /
// NonLiteralUnderBoxError on inputs outside the fragment.
Tableau build_tableau(const std::vector<Formula>& formulas);

struct CheatReport {
  enum class Verdict { MustCheck, NoCheckNeeded, Inconsistent };
  Verdict verdict = Verdict::NoCheckNeeded;
  // Intersection of all minimal sets; empty with verdict MustCheck means
  // incomparable minimal sets (caller picks one set to verify).
  std::vector<BoxedLiteral> must_check;
  // Every inclusion-minimal boxed set of an open branch, each sorted,
  // listed in lexicographic order, duplicate-free.
  std::vector<std::vector<BoxedLiteral>> minimal_sets;
  // Diamond literals present on open branches (excluded from minimal sets).
  std::vector<BoxedLiteral> diamonds;
  int open_branches = 0;
  int closed_branches = 0;
};

// Violation detection over the finished tableau: an empty minimal boxed set
// means no obligation can be violated; otherwise the obligations common to
// all minimal sets must be checked.
CheatReport cheat_detect(const Tableau& tableau);

// True iff the branch's world can serve as its own successor: adding every
// boxed literal's body to the branch literals still admits an open branch
// of the source formulas.
bool self_loop_check(const Branch& branch);

// Indented-tree rendering plus a branch summary.
std::string to_text(const Tableau& tableau);

// Graphviz digraph: node per formula occurrence, edge per rule application.
std::string to_dot(const Tableau& tableau);

}  // namespace deon
