#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace deon {

struct AtomId {
  std::string name;
  auto operator<=>(const AtomId&) const = default;
};

struct ModalityId {
  std::string label;
  auto operator<=>(const ModalityId&) const = default;
};

// Unlabeled O / P operators in source text mean this modality.
inline const ModalityId kDefaultModality{"ought"};

enum class Connective : std::uint8_t {
  Top,
  Bottom,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Box,
  Diamond,
};

// Immutable formula tree with structural equality. Copies are cheap
// (shared nodes); there is no mutation API, so sharing is safe.
class Formula {
 public:
  Formula() : Formula(top()) {}

  static Formula top();
  static Formula bottom();
  static Formula atom(AtomId id);
  static Formula atom(std::string name) { return atom(AtomId{std::move(name)}); }
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula box(ModalityId m, Formula f);
  static Formula diamond(ModalityId m, Formula f);

  Connective kind() const { return node_->kind; }

  const AtomId& atom_id() const {
    assert(kind() == Connective::Atom);
    return node_->atom;
  }
  const ModalityId& modality() const {
    assert(kind() == Connective::Box || kind() == Connective::Diamond);
    return node_->modality;
  }
  // Operand of Not / Box / Diamond.
  Formula child() const {
    assert(node_->lhs != nullptr && node_->rhs == nullptr);
    return Formula(node_->lhs);
  }
  Formula left() const {
    assert(node_->lhs != nullptr && node_->rhs != nullptr);
    return Formula(node_->lhs);
  }
  Formula right() const {
    assert(node_->rhs != nullptr);
    return Formula(node_->rhs);
  }

  bool operator==(const Formula& other) const;
  std::size_t hash() const { return node_->hash; }

  // Number of nodes in the tree.
  std::size_t size() const;

 private:
  struct Node {
    Connective kind;
    AtomId atom;          // Atom only
    ModalityId modality;  // Box / Diamond only
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

// Atom or negated atom.
bool is_literal(const Formula& f);

// Max nesting depth of Box/Diamond operators.
int modal_depth(const Formula& f);

// Negation normal form: Not only over atoms, no Implies, logically
// equivalent. Performs no constant folding so modal_depth is preserved.
Formula nnf(const Formula& f);

// K-valid constant folding (true/false absorption, double negation).
// Does not touch Box over non-constant operands.
Formula simplify(const Formula& f);

// Rendering in .norm formula syntax; round-trips through the parser.
std::string to_string(const Formula& f);

// The boxed-literal tableau accepts modal depth <= 1 with every Box/Diamond
// applied to a literal. Throws NestedModalityError / NonLiteralUnderBoxError.
void validate_boxed_literal_fragment(const Formula& f);

struct Partition;  // problem.hpp

// From a norm P -> O[m] Q (P, Q literals) derive the pseudo-contrapositive
// ~Q -> O[m] ~P, rewriting each negated atom to its positive complement when
// the atom belongs to a declared two-element partition. Throws ShapeError on
// any other norm shape.
Formula derive_pseudo_contrapositive(const Formula& norm, std::span<const Partition> partitions);

}  // namespace deon

template <>
struct std::hash<deon::Formula> {
  std::size_t operator()(const deon::Formula& f) const noexcept { return f.hash(); }
};
