#include "deon/formula.hpp"

#include <algorithm>

#include "deon/errors.hpp"
#include "deon/partition.hpp"

namespace deon {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind);
  h = combine(h, std::hash<std::string>{}(n.atom.name));
  h = combine(h, std::hash<std::string>{}(n.modality.label));
  if (n.lhs) h = combine(h, n.lhs->hash);
  if (n.rhs) h = combine(h, n.rhs->hash);
  n.hash = h;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::top() {
  static const Formula f = make(Node{Connective::Top, {}, {}, nullptr, nullptr});
  return f;
}

Formula Formula::bottom() {
  static const Formula f = make(Node{Connective::Bottom, {}, {}, nullptr, nullptr});
  return f;
}

Formula Formula::atom(AtomId id) {
  return make(Node{Connective::Atom, std::move(id), {}, nullptr, nullptr});
}

Formula Formula::negation(Formula f) {
  return make(Node{Connective::Not, {}, {}, f.node_, nullptr});
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Node{Connective::And, {}, {}, lhs.node_, rhs.node_});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Node{Connective::Or, {}, {}, lhs.node_, rhs.node_});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Node{Connective::Implies, {}, {}, lhs.node_, rhs.node_});
}

Formula Formula::box(ModalityId m, Formula f) {
  return make(Node{Connective::Box, {}, std::move(m), f.node_, nullptr});
}

Formula Formula::diamond(ModalityId m, Formula f) {
  return make(Node{Connective::Diamond, {}, std::move(m), f.node_, nullptr});
}

bool Formula::operator==(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  if (a->atom != b->atom || a->modality != b->modality) return false;
  const bool lhs_eq = (a->lhs == b->lhs) ||
                      (a->lhs && b->lhs && Formula(a->lhs) == Formula(b->lhs));
  if (!lhs_eq) return false;
  return (a->rhs == b->rhs) || (a->rhs && b->rhs && Formula(a->rhs) == Formula(b->rhs));
}

std::size_t Formula::size() const {
  switch (kind()) {
    case Connective::Top:
    case Connective::Bottom:
    case Connective::Atom:
      return 1;
    case Connective::Not:
    case Connective::Box:
    case Connective::Diamond:
      return 1 + child().size();
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      return 1 + left().size() + right().size();
  }
  return 1;
}

bool is_literal(const Formula& f) {
  if (f.kind() == Connective::Atom) return true;
  return f.kind() == Connective::Not && f.child().kind() == Connective::Atom;
}

int modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Connective::Top:
    case Connective::Bottom:
    case Connective::Atom:
      return 0;
    case Connective::Not:
      return modal_depth(f.child());
    case Connective::Box:
    case Connective::Diamond:
      return 1 + modal_depth(f.child());
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
  return 0;
}

namespace {

Formula nnf_signed(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Connective::Top:
      return positive ? Formula::top() : Formula::bottom();
    case Connective::Bottom:
      return positive ? Formula::bottom() : Formula::top();
    case Connective::Atom:
      return positive ? f : Formula::negation(f);
    case Connective::Not:
      return nnf_signed(f.child(), !positive);
    case Connective::And: {
      Formula l = nnf_signed(f.left(), positive);
      Formula r = nnf_signed(f.right(), positive);
      return positive ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
    }
    case Connective::Or: {
      Formula l = nnf_signed(f.left(), positive);
      Formula r = nnf_signed(f.right(), positive);
      return positive ? Formula::disjunction(l, r) : Formula::conjunction(l, r);
    }
    case Connective::Implies: {
      // a -> b reads as ~a | b before the sign is applied.
      Formula l = nnf_signed(f.left(), !positive);
      Formula r = nnf_signed(f.right(), positive);
      return positive ? Formula::disjunction(l, r) : Formula::conjunction(l, r);
    }
    case Connective::Box: {
      Formula inner = nnf_signed(f.child(), positive);
      return positive ? Formula::box(f.modality(), inner)
                      : Formula::diamond(f.modality(), inner);
    }
    case Connective::Diamond: {
      Formula inner = nnf_signed(f.child(), positive);
      return positive ? Formula::diamond(f.modality(), inner)
                      : Formula::box(f.modality(), inner);
    }
  }
  assert(false && "unreachable connective");
  return f;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_signed(f, true); }

Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case Connective::Top:
    case Connective::Bottom:
    case Connective::Atom:
      return f;
    case Connective::Not: {
      Formula c = simplify(f.child());
      if (c.kind() == Connective::Top) return Formula::bottom();
      if (c.kind() == Connective::Bottom) return Formula::top();
      if (c.kind() == Connective::Not) return c.child();
      return Formula::negation(c);
    }
    case Connective::And: {
      Formula l = simplify(f.left());
      Formula r = simplify(f.right());
      if (l.kind() == Connective::Bottom || r.kind() == Connective::Bottom)
        return Formula::bottom();
      if (l.kind() == Connective::Top) return r;
      if (r.kind() == Connective::Top) return l;
      return Formula::conjunction(l, r);
    }
    case Connective::Or: {
      Formula l = simplify(f.left());
      Formula r = simplify(f.right());
      if (l.kind() == Connective::Top || r.kind() == Connective::Top) return Formula::top();
      if (l.kind() == Connective::Bottom) return r;
      if (r.kind() == Connective::Bottom) return l;
      return Formula::disjunction(l, r);
    }
    case Connective::Implies: {
      Formula l = simplify(f.left());
      Formula r = simplify(f.right());
      if (l.kind() == Connective::Top) return r;
      if (l.kind() == Connective::Bottom) return Formula::top();
      if (r.kind() == Connective::Top) return Formula::top();
      return Formula::implication(l, r);
    }
    case Connective::Box: {
      Formula c = simplify(f.child());
      if (c.kind() == Connective::Top) return Formula::top();
      return Formula::box(f.modality(), c);
    }
    case Connective::Diamond: {
      Formula c = simplify(f.child());
      if (c.kind() == Connective::Bottom) return Formula::bottom();
      return Formula::diamond(f.modality(), c);
    }
  }
  return f;
}

namespace {

// Precedence: -> lowest, then |, then &, then prefix operators.
enum Prec { kImplies = 0, kOr = 1, kAnd = 2, kUnary = 3 };

void render(const Formula& f, int min_prec, std::string& out) {
  const auto paren = [&](int prec, auto&& body) {
    const bool need = prec < min_prec;
    if (need) out += '(';
    body();
    if (need) out += ')';
  };
  switch (f.kind()) {
    case Connective::Top:
      out += "true";
      return;
    case Connective::Bottom:
      out += "false";
      return;
    case Connective::Atom:
      out += f.atom_id().name;
      return;
    case Connective::Not:
      out += '~';
      render(f.child(), kUnary, out);
      return;
    case Connective::Box:
    case Connective::Diamond: {
      out += f.kind() == Connective::Box ? 'O' : 'P';
      if (f.modality() != kDefaultModality) {
        out += '[';
        out += f.modality().label;
        out += ']';
      }
      out += ' ';
      render(f.child(), kUnary, out);
      return;
    }
    case Connective::And:
      paren(kAnd, [&] {
        render(f.left(), kAnd, out);
        out += " & ";
        render(f.right(), kAnd + 1, out);
      });
      return;
    case Connective::Or:
      paren(kOr, [&] {
        render(f.left(), kOr, out);
        out += " | ";
        render(f.right(), kOr + 1, out);
      });
      return;
    case Connective::Implies:
      // Right associative.
      paren(kImplies, [&] {
        render(f.left(), kImplies + 1, out);
        out += " -> ";
        render(f.right(), kImplies, out);
      });
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

namespace {

void check_boxes_over_literals(const Formula& f) {
  switch (f.kind()) {
    case Connective::Top:
    case Connective::Bottom:
    case Connective::Atom:
      return;
    case Connective::Not:
      check_boxes_over_literals(f.child());
      return;
    case Connective::Box:
    case Connective::Diamond:
      if (!is_literal(f.child()))
        throw NonLiteralUnderBoxError(
            "modal operator over a non-literal is outside the tableau fragment: " +
            to_string(f));
      return;
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      check_boxes_over_literals(f.left());
      check_boxes_over_literals(f.right());
      return;
  }
}

}  // namespace

void validate_boxed_literal_fragment(const Formula& f) {
  if (modal_depth(f) > 1)
    throw NestedModalityError(
        "nested obligations are outside the tableau fragment; use the hypertableau engine: " +
        to_string(f));
  check_boxes_over_literals(f);
}

std::optional<std::string> partition_complement(const std::vector<Partition>& partitions,
                                                const std::string& atom) {
  for (const auto& p : partitions) {
    if (p.values.size() != 2) continue;
    if (atom == Partition::atom_name(p.site, p.values[0]))
      return Partition::atom_name(p.site, p.values[1]);
    if (atom == Partition::atom_name(p.site, p.values[1]))
      return Partition::atom_name(p.site, p.values[0]);
  }
  return std::nullopt;
}

namespace {

// Negate a literal, rewriting ~c(s,v1) to c(s,v2) on two-element partitions.
Formula complement_literal(const Formula& lit, std::span<const Partition> partitions) {
  assert(is_literal(lit));
  if (lit.kind() == Connective::Not) return lit.child();
  const std::vector<Partition> parts(partitions.begin(), partitions.end());
  if (auto partner = partition_complement(parts, lit.atom_id().name))
    return Formula::atom(*partner);
  return Formula::negation(lit);
}

}  // namespace

Formula derive_pseudo_contrapositive(const Formula& norm,
                                     std::span<const Partition> partitions) {
  if (norm.kind() != Connective::Implies)
    throw ShapeError("pseudo-contrapositive requires a conditional norm, got: " +
                     to_string(norm));
  const Formula antecedent = norm.left();
  const Formula consequent = norm.right();
  if (!is_literal(antecedent))
    throw ShapeError("pseudo-contrapositive requires a literal antecedent, got: " +
                     to_string(antecedent));
  if (consequent.kind() != Connective::Box || !is_literal(consequent.child()))
    throw ShapeError("pseudo-contrapositive requires an obligation over a literal, got: " +
                     to_string(consequent));
  const Formula flipped_antecedent = complement_literal(consequent.child(), partitions);
  const Formula flipped_consequent =
      Formula::box(consequent.modality(), complement_literal(antecedent, partitions));
  return Formula::implication(flipped_antecedent, flipped_consequent);
}

}  // namespace deon
