#include "deon/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

#include "deon/errors.hpp"

namespace deon {

std::string to_string(const SignedLiteral& l) {
  return l.positive ? l.atom.name : "~" + l.atom.name;
}

std::string to_string(const BoxedLiteral& l, bool diamond) {
  std::string s = diamond ? "P" : "O";
  if (!(l.modality == kDefaultModality)) s += "[" + l.modality.label + "]";
  return s + " " + to_string(l.literal);
}

SignedLiteral to_signed_literal(const Formula& f) {
  assert(is_literal(f));
  if (f.kind() == Connective::Atom) return {true, f.atom_id()};
  return {false, f.child().atom_id()};
}

Formula to_formula(const SignedLiteral& l) {
  Formula a = Formula::atom(l.atom.name);
  return l.positive ? a : Formula::negation(a);
}

bool Branch::has_literal(const SignedLiteral& l) const {
  return std::find(literals.begin(), literals.end(), l) != literals.end();
}

int Tableau::open_count() const {
  int n = 0;
  for (const auto& b : branches) n += b.open ? 1 : 0;
  return n;
}

namespace {

// Negate a literal without stacking negations.
Formula negate_literal(const Formula& f) {
  assert(is_literal(f));
  if (f.kind() == Connective::Not) return f.child();
  return Formula::negation(f);
}

bool collect_literal_conjuncts(const Formula& f, std::vector<SignedLiteral>& out) {
  if (f.kind() == Connective::And)
    return collect_literal_conjuncts(f.left(), out) &&
           collect_literal_conjuncts(f.right(), out);
  if (!is_literal(f)) return false;
  SignedLiteral l = to_signed_literal(f);
  if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  return true;
}

// All-literal antecedent of a closure constraint; the branch closes once
// every required literal is present.
struct Constraint {
  std::vector<SignedLiteral> required;
};

struct Work {
  std::deque<Formula> pending;
  Branch branch;
  std::vector<Constraint> constraints;
  int leaf = 0;
};

class Builder {
 public:
  explicit Builder(const std::vector<Formula>& formulas) {
    tableau_.nodes.push_back({});  // synthetic root
    tableau_.formulas =
        std::make_shared<const std::vector<Formula>>(formulas);
    Work w;
    w.branch.source = tableau_.formulas;
    for (const auto& f : formulas) w.pending.push_back(f);
    run(std::move(w));
  }

  Tableau take() { return std::move(tableau_); }

 private:
  Tableau tableau_;

  int add_node(int parent, std::string label, bool closes = false) {
    int id = static_cast<int>(tableau_.nodes.size());
    tableau_.nodes.push_back({std::move(label), parent, {}, closes});
    tableau_.nodes[parent].children.push_back(id);
    return id;
  }

  void record(Work w, bool open) {
    w.branch.open = open;
    w.branch.leaf = w.leaf;
    tableau_.branches.push_back(std::move(w.branch));
  }

  bool constraint_violated(const Work& w, const Constraint& c) const {
    return std::all_of(c.required.begin(), c.required.end(),
                       [&](const SignedLiteral& l) { return w.branch.has_literal(l); });
  }

  void run(Work w) {
    while (!w.pending.empty()) {
      Formula f = std::move(w.pending.front());
      w.pending.pop_front();
      switch (f.kind()) {
        case Connective::Top:
          w.leaf = add_node(w.leaf, "true");
          break;
        case Connective::Bottom:
          w.leaf = add_node(w.leaf, "false", true);
          record(std::move(w), false);
          return;
        case Connective::Atom:
        case Connective::Not: {
          if (is_literal(f)) {
            if (!add_literal(w, to_signed_literal(f))) return;
            break;
          }
          w.leaf = add_node(w.leaf, to_string(f));
          w.pending.push_front(push_negation(f.child()));
          break;
        }
        case Connective::And:
          w.leaf = add_node(w.leaf, to_string(f));
          w.pending.push_front(f.right());
          w.pending.push_front(f.left());
          break;
        case Connective::Or: {
          int fork = add_node(w.leaf, to_string(f));
          Work right = w;
          right.leaf = fork;
          right.pending.push_front(f.right());
          w.leaf = fork;
          w.pending.push_front(f.left());
          run(std::move(w));
          run(std::move(right));
          return;
        }
        case Connective::Implies: {
          if (f.left().kind() == Connective::Top) {
            // Exhaustiveness: the consequent holds outright.
            w.leaf = add_node(w.leaf, to_string(f));
            w.pending.push_front(f.right());
            break;
          }
          std::vector<SignedLiteral> required;
          if (f.right().kind() == Connective::Bottom &&
              collect_literal_conjuncts(f.left(), required)) {
            // Exclusiveness: close once the whole antecedent is present,
            // never fork.
            w.leaf = add_node(w.leaf, to_string(f));
            Constraint c{std::move(required)};
            if (constraint_violated(w, c)) {
              w.leaf = add_node(w.leaf, "false", true);
              record(std::move(w), false);
              return;
            }
            w.constraints.push_back(std::move(c));
            break;
          }
          int fork = add_node(w.leaf, to_string(f));
          Work right = w;
          right.leaf = fork;
          right.pending.push_front(f.right());
          w.leaf = fork;
          w.pending.push_front(is_literal(f.left()) ? negate_literal(f.left())
                                                    : Formula::negation(f.left()));
          run(std::move(w));
          run(std::move(right));
          return;
        }
        case Connective::Box: {
          BoxedLiteral b{f.modality(), to_signed_literal(f.child())};
          w.leaf = add_node(w.leaf, to_string(b));
          auto& set = w.branch.boxed;
          if (std::find(set.begin(), set.end(), b) == set.end()) set.push_back(b);
          break;
        }
        case Connective::Diamond: {
          BoxedLiteral d{f.modality(), to_signed_literal(f.child())};
          w.leaf = add_node(w.leaf, to_string(d, true));
          auto& set = w.branch.diamonds;
          if (std::find(set.begin(), set.end(), d) == set.end()) set.push_back(d);
          break;
        }
      }
    }
    record(std::move(w), true);
  }

  // One negation-pushing step for a negated compound.
  static Formula push_negation(const Formula& g) {
    switch (g.kind()) {
      case Connective::Top:
        return Formula::bottom();
      case Connective::Bottom:
        return Formula::top();
      case Connective::Not:
        return g.child();
      case Connective::And:
        return Formula::disjunction(Formula::negation(g.left()),
                                    Formula::negation(g.right()));
      case Connective::Or:
        return Formula::conjunction(Formula::negation(g.left()),
                                    Formula::negation(g.right()));
      case Connective::Implies:
        return Formula::conjunction(g.left(), Formula::negation(g.right()));
      case Connective::Box:
        return Formula::diamond(g.modality(), negate_literal(g.child()));
      case Connective::Diamond:
        return Formula::box(g.modality(), negate_literal(g.child()));
      case Connective::Atom:
        break;  // unreachable: literal handled by caller
    }
    assert(false);
    return g;
  }

  // Returns false when the branch closed (and was recorded).
  bool add_literal(Work& w, const SignedLiteral& l) {
    w.leaf = add_node(w.leaf, to_string(l));
    if (w.branch.has_literal(l.complement())) {
      w.leaf = add_node(w.leaf, "false", true);
      record(std::move(w), false);
      return false;
    }
    if (w.branch.has_literal(l)) return true;
    w.branch.literals.push_back(l);
    for (const auto& c : w.constraints) {
      if (constraint_violated(w, c)) {
        w.leaf = add_node(w.leaf, "false", true);
        record(std::move(w), false);
        return false;
      }
    }
    return true;
  }
};

}  // namespace

Tableau build_tableau(const std::vector<Formula>& formulas) {
  for (const auto& f : formulas) validate_boxed_literal_fragment(f);
  Builder b(formulas);
  return b.take();
}

CheatReport cheat_detect(const Tableau& tableau) {
  CheatReport r;
  std::vector<std::vector<BoxedLiteral>> open_sets;
  for (const auto& b : tableau.branches) {
    if (!b.open) {
      ++r.closed_branches;
      continue;
    }
    ++r.open_branches;
    std::vector<BoxedLiteral> set = b.boxed;
    std::sort(set.begin(), set.end());
    if (std::find(open_sets.begin(), open_sets.end(), set) == open_sets.end())
      open_sets.push_back(set);
    for (const auto& d : b.diamonds)
      if (std::find(r.diamonds.begin(), r.diamonds.end(), d) == r.diamonds.end())
        r.diamonds.push_back(d);
  }
  std::sort(r.diamonds.begin(), r.diamonds.end());
  if (r.open_branches == 0) {
    r.verdict = CheatReport::Verdict::Inconsistent;
    return r;
  }
  auto subset = [](const std::vector<BoxedLiteral>& a,
                   const std::vector<BoxedLiteral>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& s : open_sets) {
    bool minimal = std::none_of(open_sets.begin(), open_sets.end(),
                                [&](const auto& t) { return t != s && subset(t, s); });
    if (minimal) r.minimal_sets.push_back(s);
  }
  std::sort(r.minimal_sets.begin(), r.minimal_sets.end());
  if (std::any_of(r.minimal_sets.begin(), r.minimal_sets.end(),
                  [](const auto& s) { return s.empty(); })) {
    assert(r.minimal_sets.size() == 1);  // the empty set is below every set
    r.verdict = CheatReport::Verdict::NoCheckNeeded;
    return r;
  }
  r.verdict = CheatReport::Verdict::MustCheck;
  r.must_check = r.minimal_sets.front();
  for (size_t i = 1; i < r.minimal_sets.size(); ++i) {
    std::vector<BoxedLiteral> next;
    std::set_intersection(r.must_check.begin(), r.must_check.end(),
                          r.minimal_sets[i].begin(), r.minimal_sets[i].end(),
                          std::back_inserter(next));
    r.must_check = std::move(next);
  }
  return r;
}

bool self_loop_check(const Branch& branch) {
  assert(branch.source);
  std::vector<Formula> formulas;
  for (const auto& l : branch.literals) formulas.push_back(to_formula(l));
  for (const auto& b : branch.boxed) formulas.push_back(to_formula(b.literal));
  for (const auto& f : *branch.source) formulas.push_back(f);
  Tableau t = build_tableau(formulas);
  return t.open_count() > 0;
}

namespace {

void render_text(const Tableau& t, int node, std::string indent, bool bullet,
                 std::ostringstream& out) {
  for (;;) {
    const TableauNode& n = t.nodes[node];
    out << indent << (bullet ? "- " : "") << n.label;
    if (n.children.empty()) out << (n.closes ? "  [closed]" : "  [open]");
    out << "\n";
    bullet = false;
    if (n.children.size() != 1) break;
    node = n.children.front();
  }
  const TableauNode& n = t.nodes[node];
  for (int c : n.children) render_text(t, c, indent + "  ", true, out);
}

std::string branch_summary(const Branch& b) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& l : b.literals) {
    out << (first ? "" : ", ") << to_string(l);
    first = false;
  }
  for (const auto& x : b.boxed) {
    out << (first ? "" : ", ") << to_string(x);
    first = false;
  }
  for (const auto& d : b.diamonds) {
    out << (first ? "" : ", ") << to_string(d, true);
    first = false;
  }
  out << "}";
  return out.str();
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_text(const Tableau& tableau) {
  std::ostringstream out;
  const auto& root = tableau.nodes.front();
  if (root.children.empty()) {
    out << "(empty)  [open]\n";
  } else {
    // The root is synthetic; a single-child root renders as a plain chain.
    if (root.children.size() == 1) {
      render_text(tableau, root.children.front(), "", false, out);
    } else {
      for (int c : root.children) render_text(tableau, c, "", true, out);
    }
  }
  out << "branches:\n";
  for (size_t i = 0; i < tableau.branches.size(); ++i) {
    const Branch& b = tableau.branches[i];
    out << "  " << (i + 1) << ": " << branch_summary(b)
        << (b.open ? "  open" : "  closed") << "\n";
  }
  return out.str();
}

std::string to_dot(const Tableau& tableau) {
  std::ostringstream out;
  out << "digraph tableau {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < tableau.nodes.size(); ++i) {
    const TableauNode& n = tableau.nodes[i];
    if (i == 0) {
      out << "  n0 [label=\"\", shape=point];\n";
      continue;
    }
    out << "  n" << i << " [label=\"" << escape_dot(n.label) << "\"";
    if (n.closes) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (size_t i = 1; i < tableau.nodes.size(); ++i)
    out << "  n" << tableau.nodes[i].parent << " -> n" << i << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace deon
