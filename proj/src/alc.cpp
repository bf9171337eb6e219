#include "deon/alc.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace deon {

Concept Concept::top() {
  static const Concept c{std::make_shared<Node>(Node{ConceptKind::Top, "", "", nullptr, nullptr})};
  return c;
}

Concept Concept::bottom() {
  static const Concept c{std::make_shared<Node>(Node{ConceptKind::Bottom, "", "", nullptr, nullptr})};
  return c;
}

Concept Concept::name(std::string n) {
  return Concept{std::make_shared<Node>(Node{ConceptKind::Name, std::move(n), "", nullptr, nullptr})};
}

Concept Concept::negation(Concept c) {
  return Concept{std::make_shared<Node>(Node{ConceptKind::Not, "", "", c.node_, nullptr})};
}

Concept Concept::conjunction(Concept l, Concept r) {
  return Concept{std::make_shared<Node>(Node{ConceptKind::And, "", "", l.node_, r.node_})};
}

Concept Concept::disjunction(Concept l, Concept r) {
  return Concept{std::make_shared<Node>(Node{ConceptKind::Or, "", "", l.node_, r.node_})};
}

Concept Concept::all(std::string role, Concept c) {
  return Concept{std::make_shared<Node>(Node{ConceptKind::All, "", std::move(role), c.node_, nullptr})};
}

Concept Concept::some(std::string role, Concept c) {
  return Concept{std::make_shared<Node>(Node{ConceptKind::Some, "", std::move(role), c.node_, nullptr})};
}

const std::string& Concept::name_str() const {
  assert(kind() == ConceptKind::Name);
  return node_->name;
}

const std::string& Concept::role() const {
  assert(kind() == ConceptKind::All || kind() == ConceptKind::Some);
  return node_->role;
}

Concept Concept::child() const {
  assert(kind() == ConceptKind::Not || kind() == ConceptKind::All ||
         kind() == ConceptKind::Some);
  return Concept{node_->lhs};
}

Concept Concept::left() const {
  assert(kind() == ConceptKind::And || kind() == ConceptKind::Or);
  return Concept{node_->lhs};
}

Concept Concept::right() const {
  assert(kind() == ConceptKind::And || kind() == ConceptKind::Or);
  return Concept{node_->rhs};
}

bool Concept::operator==(const Concept& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return true;
    case ConceptKind::Name:
      return node_->name == o.node_->name;
    case ConceptKind::Not:
      return child() == o.child();
    case ConceptKind::All:
    case ConceptKind::Some:
      return node_->role == o.node_->role && child() == o.child();
    case ConceptKind::And:
    case ConceptKind::Or:
      return left() == o.left() && right() == o.right();
  }
  return false;
}

namespace {

// Precedence: Or lowest, then And; unary forms bind tightest.
int precedence(ConceptKind k) {
  switch (k) {
    case ConceptKind::Or:
      return 1;
    case ConceptKind::And:
      return 2;
    default:
      return 3;
  }
}

void render(const Concept& c, int parent_prec, std::ostringstream& out) {
  int prec = precedence(c.kind());
  bool paren = prec < parent_prec;
  if (paren) out << "(";
  switch (c.kind()) {
    case ConceptKind::Top:
      out << "true";
      break;
    case ConceptKind::Bottom:
      out << "false";
      break;
    case ConceptKind::Name:
      out << c.name_str();
      break;
    case ConceptKind::Not:
      out << "~";
      render(c.child(), 3, out);
      break;
    case ConceptKind::And:
      render(c.left(), 2, out);
      out << " & ";
      render(c.right(), 3, out);
      break;
    case ConceptKind::Or:
      render(c.left(), 1, out);
      out << " | ";
      render(c.right(), 2, out);
      break;
    case ConceptKind::All:
    case ConceptKind::Some: {
      out << (c.kind() == ConceptKind::All ? "forall " : "exists ") << c.role()
          << ".";
      const Concept& body = c.child();
      if (precedence(body.kind()) == 3) {
        render(body, 3, out);
      } else {
        out << "(";
        render(body, 0, out);
        out << ")";
      }
      break;
    }
  }
  if (paren) out << ")";
}

}  // namespace

std::string to_string(const Concept& c) {
  std::ostringstream out;
  render(c, 0, out);
  return out.str();
}

std::string role_name(const ModalityId& m) {
  if (m == kDefaultModality) return "r";
  return "r_" + m.label;
}

Concept phi(const Formula& f) {
  switch (f.kind()) {
    case Connective::Top:
      return Concept::top();
    case Connective::Bottom:
      return Concept::bottom();
    case Connective::Atom:
      return Concept::name(f.atom_id().name);
    case Connective::Not:
      return Concept::negation(phi(f.child()));
    case Connective::And:
      return Concept::conjunction(phi(f.left()), phi(f.right()));
    case Connective::Or:
      return Concept::disjunction(phi(f.left()), phi(f.right()));
    case Connective::Implies:
      return Concept::disjunction(Concept::negation(phi(f.left())),
                                  phi(f.right()));
    case Connective::Box:
      return Concept::all(role_name(f.modality()), phi(f.child()));
    case Connective::Diamond:
      return Concept::some(role_name(f.modality()), phi(f.child()));
  }
  assert(false);
  return Concept::top();
}

namespace {

Concept nnf_signed(const Concept& c, bool positive) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return positive ? Concept::top() : Concept::bottom();
    case ConceptKind::Bottom:
      return positive ? Concept::bottom() : Concept::top();
    case ConceptKind::Name:
      return positive ? c : Concept::negation(c);
    case ConceptKind::Not:
      return nnf_signed(c.child(), !positive);
    case ConceptKind::And: {
      Concept l = nnf_signed(c.left(), positive);
      Concept r = nnf_signed(c.right(), positive);
      return positive ? Concept::conjunction(l, r) : Concept::disjunction(l, r);
    }
    case ConceptKind::Or: {
      Concept l = nnf_signed(c.left(), positive);
      Concept r = nnf_signed(c.right(), positive);
      return positive ? Concept::disjunction(l, r) : Concept::conjunction(l, r);
    }
    case ConceptKind::All: {
      Concept b = nnf_signed(c.child(), positive);
      return positive ? Concept::all(c.role(), b) : Concept::some(c.role(), b);
    }
    case ConceptKind::Some: {
      Concept b = nnf_signed(c.child(), positive);
      return positive ? Concept::some(c.role(), b) : Concept::all(c.role(), b);
    }
  }
  assert(false);
  return c;
}

}  // namespace

Concept concept_nnf(const Concept& c) { return nnf_signed(c, true); }

namespace {

Concept pipe(const Formula& f) { return phi(simplify(nnf(f))); }

}  // namespace

Translation translate(const Problem& p) { return translate(p, {}); }

Translation translate(const Problem& p, const std::vector<Formula>& extra) {
  Translation t;
  t.modalities = p.modalities;
  for (const auto& m : t.modalities) t.roles.push_back(role_name(m));

  std::vector<Formula> partition_axioms = p.partition_axioms();
  for (const auto& o : p.observations) t.world_concepts.push_back(pipe(o));
  if (!p.tbox_constraints) {
    for (const auto& ax : partition_axioms) t.world_concepts.push_back(pipe(ax));
    // Partition structure must hold at successor worlds as well.
    for (const auto& m : t.modalities)
      for (const auto& ax : partition_axioms)
        t.world_concepts.push_back(pipe(Formula::box(m, ax)));
  }
  for (const auto& f : p.facts) t.world_concepts.push_back(pipe(f));
  for (const auto& n : p.all_norms()) t.world_concepts.push_back(pipe(n));
  for (const auto& e : extra) t.world_concepts.push_back(pipe(e));

  for (const auto& role : t.roles)
    t.tbox.push_back(Concept::some(role, Concept::top()));
  if (p.tbox_constraints)
    for (const auto& ax : partition_axioms) t.tbox.push_back(pipe(ax));
  return t;
}

std::string to_string(const Translation& t) {
  std::ostringstream out;
  out << "world concepts:\n";
  for (const auto& c : t.world_concepts) out << "  " << to_string(c) << "\n";
  out << "tbox:\n";
  for (const auto& c : t.tbox) out << "  true [= " << to_string(c) << "\n";
  return out.str();
}

namespace {

bool is_concept_literal(const Concept& c) {
  return c.kind() == ConceptKind::Name ||
         (c.kind() == ConceptKind::Not && c.child().kind() == ConceptKind::Name);
}

void flatten_or(const Concept& c, std::vector<Concept>& out) {
  if (c.kind() == ConceptKind::Or) {
    flatten_or(c.left(), out);
    flatten_or(c.right(), out);
    return;
  }
  out.push_back(c);
}

void flatten_and(const Concept& c, std::vector<Concept>& out) {
  if (c.kind() == ConceptKind::And) {
    flatten_and(c.left(), out);
    flatten_and(c.right(), out);
    return;
  }
  out.push_back(c);
}

bool is_flat_literal_disjunction(const Concept& c) {
  std::vector<Concept> parts;
  flatten_or(c, parts);
  return std::all_of(parts.begin(), parts.end(), is_concept_literal);
}

class Clausifier {
 public:
  explicit Clausifier(const Translation& t) {
    result_.roles = t.roles;
    for (const auto& w : t.world_concepts) add_world_concept(concept_nnf(w));
    for (const auto& ax : t.tbox) add_gci(concept_nnf(ax));
  }

  ClauseSet take() { return std::move(result_); }

 private:
  ClauseSet result_;
  int next_name_ = 0;
  std::map<std::string, std::string> cache_;  // rendered concept -> name

  void assert_at_root(const std::string& name) {
    auto& a = result_.assertions;
    if (std::find(a.begin(), a.end(), name) == a.end()) a.push_back(name);
  }

  // A concept the named world must satisfy; conjunctions split, names
  // assert directly, anything else gets a defined name.
  void add_world_concept(const Concept& c) {
    std::vector<Concept> parts;
    flatten_and(c, parts);
    for (const auto& part : parts) {
      switch (part.kind()) {
        case ConceptKind::Top:
          break;
        case ConceptKind::Bottom:
          result_.clauses.push_back({});  // unconditionally contradictory
          break;
        case ConceptKind::Name:
          assert_at_root(part.name_str());
          break;
        default:
          assert_at_root(define(part));
          break;
      }
    }
  }

  // Fresh (or reused) name N with N implying the definition.
  std::string define(const Concept& c) {
    std::string key = to_string(c);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::string n = "Q" + std::to_string(next_name_++);
    cache_.emplace(key, n);
    result_.name_table.emplace(n, c);
    emit({Concept::negation(Concept::name(n)), c});
    return n;
  }

  void add_gci(const Concept& rhs) { emit({rhs}); }

  // Emit clauses for true [= d1 | ... | dn.
  void emit(std::vector<Concept> raw) {
    // Conjunct distribution can hand back a nested disjunction, so every
    // pass flattens before looking for a conjunct to split on.
    std::vector<Concept> disjuncts;
    for (const auto& d : raw) flatten_or(d, disjuncts);
    // A conjunctive disjunct distributes: the definition splits per conjunct.
    for (size_t i = 0; i < disjuncts.size(); ++i) {
      if (disjuncts[i].kind() != ConceptKind::And) continue;
      std::vector<Concept> conjuncts;
      flatten_and(disjuncts[i], conjuncts);
      for (const auto& cj : conjuncts) {
        std::vector<Concept> branch = disjuncts;
        branch[i] = cj;
        emit(std::move(branch));
      }
      return;
    }
    DLClause clause;
    int next_var = 1;
    for (const auto& d : disjuncts) {
      switch (d.kind()) {
        case ConceptKind::Top:
          return;  // trivially true
        case ConceptKind::Bottom:
          break;  // contributes nothing
        case ConceptKind::Name:
          clause.head.push_back({ClauseAtom::Kind::Concept, d.name_str(), "", 0, 0});
          break;
        case ConceptKind::Not:
          assert(d.child().kind() == ConceptKind::Name);
          clause.body.push_back(
              {ClauseAtom::Kind::Concept, d.child().name_str(), "", 0, 0});
          break;
        case ConceptKind::All: {
          int y = next_var++;
          clause.body.push_back({ClauseAtom::Kind::Role, d.role(), "", 0, y});
          place_filler(d.child(), y, clause);
          break;
        }
        case ConceptKind::Some: {
          Concept filler = d.child();
          std::string fname;
          if (filler.kind() == ConceptKind::Top)
            fname = "true";
          else if (filler.kind() == ConceptKind::Name)
            fname = filler.name_str();
          else
            fname = define(filler);
          clause.head.push_back({ClauseAtom::Kind::Exists, d.role(), fname, 0, 0});
          break;
        }
        case ConceptKind::And:
        case ConceptKind::Or:
          assert(false);  // And handled above, Or flattened away
          break;
      }
    }
    // Flattening can surface the same literal twice; keep one copy.
    auto dedup = [](std::vector<ClauseAtom>& atoms) {
      std::vector<ClauseAtom> kept;
      for (auto& a : atoms)
        if (std::find(kept.begin(), kept.end(), a) == kept.end())
          kept.push_back(std::move(a));
      atoms = std::move(kept);
    };
    dedup(clause.body);
    dedup(clause.head);
    // Skip tautologies: an atom required by the body already in the head.
    for (const auto& b : clause.body)
      for (const auto& h : clause.head)
        if (b == h) return;
    result_.clauses.push_back(std::move(clause));
  }

  // Constraint a value restriction imposes on the successor variable.
  void place_filler(const Concept& filler, int y, DLClause& clause) {
    if (is_flat_literal_disjunction(filler)) {
      std::vector<Concept> lits;
      flatten_or(filler, lits);
      for (const auto& l : lits) {
        if (l.kind() == ConceptKind::Name)
          clause.head.push_back({ClauseAtom::Kind::Concept, l.name_str(), "", y, 0});
        else
          clause.body.push_back(
              {ClauseAtom::Kind::Concept, l.child().name_str(), "", y, 0});
      }
      return;
    }
    if (filler.kind() == ConceptKind::Top) return;
    if (filler.kind() == ConceptKind::Bottom) {
      // No successor may exist; an unsatisfiable head marker would be
      // wrong, so require a contradiction at y instead.
      clause.head.push_back({ClauseAtom::Kind::Concept, define_bottom(), "", y, 0});
      return;
    }
    clause.head.push_back({ClauseAtom::Kind::Concept, define(filler), "", y, 0});
  }

  // A name constrained to be empty.
  std::string define_bottom() {
    std::string key = to_string(Concept::bottom());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::string n = "Q" + std::to_string(next_name_++);
    cache_.emplace(key, n);
    result_.name_table.emplace(n, Concept::bottom());
    DLClause c;
    c.body.push_back({ClauseAtom::Kind::Concept, n, "", 0, 0});
    result_.clauses.push_back(std::move(c));
    return n;
  }
};

std::string var_name(int v) {
  if (v == 0) return "x";
  if (v == 1) return "y";
  return "y" + std::to_string(v);
}

}  // namespace

ClauseSet clausify(const Translation& t) {
  Clausifier c(t);
  return c.take();
}

std::string to_string(const ClauseAtom& a) {
  switch (a.kind) {
    case ClauseAtom::Kind::Concept:
      return a.name + "(" + var_name(a.term) + ")";
    case ClauseAtom::Kind::Role:
      return a.name + "(" + var_name(a.term) + "," + var_name(a.to) + ")";
    case ClauseAtom::Kind::Exists:
      return "exists " + a.name + "." + a.filler + " [" + var_name(a.term) + "]";
  }
  return "";
}

std::string to_string(const DLClause& c) {
  std::ostringstream out;
  for (size_t i = 0; i < c.body.size(); ++i)
    out << (i ? ", " : "") << to_string(c.body[i]);
  out << (c.body.empty() ? "->" : " ->");
  for (size_t i = 0; i < c.head.size(); ++i)
    out << (i ? " | " : " ") << to_string(c.head[i]);
  return out.str();
}

}  // namespace deon
