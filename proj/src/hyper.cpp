#include "deon/hyper.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "deon/errors.hpp"

namespace deon {

namespace {

using ExistsFact = std::pair<std::string, std::string>;  // role, filler

struct State {
  std::vector<bool> named;
  std::vector<int> parent;
  std::vector<std::string> via_role;
  std::vector<std::set<std::string>> concepts;
  std::vector<std::set<ExistsFact>> exists;
  std::map<std::string, std::set<std::pair<int, int>>> edges;  // by role
  std::vector<TraceStep> path;

  int size() const { return static_cast<int>(concepts.size()); }

  bool has_edge(const std::string& role, int i, int j) const {
    auto it = edges.find(role);
    return it != edges.end() && it->second.count({i, j}) > 0;
  }
};

struct Blocking {
  std::vector<bool> blocked;
  std::vector<int> blocker;
};

struct ViolatedInstance {
  int clause = -1;
  std::vector<int> binding;
};

class Solver {
 public:
  Solver(const ClauseSet& cs, const HyperOptions& opt) : cs_(cs), opt_(opt) {
    assert(opt.modalities.size() == opt.roles.size());
    for (size_t k = 0; k < opt.roles.size(); ++k)
      role_modality_.emplace(opt.roles[k], opt.modalities[k].label);
  }

  HyperResult run() {
    State s;
    add_individual(s, true, -1, "");
    for (const auto& name : cs_.assertions) add_concept(s, 0, name);
    std::optional<KripkeModel> model = saturate_impl(std::move(s));
    HyperResult r;
    r.satisfiable = model.has_value();
    r.model = std::move(model);
    r.refutation = std::move(refutation_);
    r.individuals_created = individuals_created_;
    r.facts_added = facts_added_;
    r.branches_explored = branches_explored_;
    r.max_individuals_in_branch = max_individuals_;
    return r;
  }

 private:
  const ClauseSet& cs_;
  const HyperOptions& opt_;
  std::map<std::string, std::string> role_modality_;
  std::vector<TraceStep> refutation_;
  int individuals_created_ = 0;
  long long facts_added_ = 0;
  int branches_explored_ = 1;
  int max_individuals_ = 0;

  int add_individual(State& s, bool named, int parent, std::string via) {
    if (++individuals_created_ > opt_.max_individuals)
      throw ResourceLimitError("individual limit exceeded");
    s.named.push_back(named);
    s.parent.push_back(parent);
    s.via_role.push_back(std::move(via));
    s.concepts.emplace_back();
    s.exists.emplace_back();
    max_individuals_ = std::max(max_individuals_, s.size());
    return s.size() - 1;
  }

  void count_fact() {
    if (++facts_added_ > opt_.max_facts)
      throw ResourceLimitError("fact limit exceeded");
  }

  void add_concept(State& s, int i, const std::string& name) {
    if (s.concepts[i].insert(name).second) count_fact();
  }

  void add_exists(State& s, int i, const ExistsFact& e) {
    if (s.exists[i].insert(e).second) count_fact();
  }

  void add_edge(State& s, const std::string& role, int i, int j) {
    if (s.edges[role].insert({i, j}).second) count_fact();
  }

  Blocking compute_blocking(const State& s) const {
    Blocking b;
    b.blocked.assign(s.size(), false);
    b.blocker.assign(s.size(), -1);
    for (int j = 0; j < s.size(); ++j) {
      if (s.named[j]) continue;
      for (int i = 0; i < j; ++i) {
        if (b.blocked[i]) continue;
        if (s.concepts[i] == s.concepts[j] && s.exists[i] == s.exists[j]) {
          b.blocked[j] = true;
          b.blocker[j] = i;
          break;
        }
      }
    }
    return b;
  }

  bool head_atom_holds(const State& s, const ClauseAtom& a,
                       const std::vector<int>& binding) const {
    if (a.kind == ClauseAtom::Kind::Concept)
      return s.concepts[binding[a.term]].count(a.name) > 0;
    assert(a.kind == ClauseAtom::Kind::Exists);
    return s.exists[binding[a.term]].count({a.name, a.filler}) > 0;
  }

  // First instance of the clause with a satisfied body and unsatisfied
  // head, in binding order.
  std::optional<ViolatedInstance> match(const State& s, const DLClause& c,
                                        std::vector<int>& binding,
                                        int var) const {
    if (var == static_cast<int>(binding.size())) {
      for (const auto& a : c.body) {
        if (a.kind == ClauseAtom::Kind::Concept) {
          if (s.concepts[binding[a.term]].count(a.name) == 0) return std::nullopt;
        } else if (a.kind == ClauseAtom::Kind::Role) {
          if (!s.has_edge(a.name, binding[a.term], binding[a.to]))
            return std::nullopt;
        }
      }
      for (const auto& a : c.head)
        if (head_atom_holds(s, a, binding)) return std::nullopt;
      ViolatedInstance v;
      v.clause = -1;  // filled by caller
      v.binding = binding;
      return v;
    }
    // Successor variables only range over role successors of x.
    if (var == 0) {
      for (int i = 0; i < s.size(); ++i) {
        binding[0] = i;
        if (auto v = match(s, c, binding, 1)) return v;
      }
      return std::nullopt;
    }
    const ClauseAtom* role_atom = nullptr;
    for (const auto& a : c.body)
      if (a.kind == ClauseAtom::Kind::Role && a.to == var) role_atom = &a;
    assert(role_atom);
    auto it = s.edges.find(role_atom->name);
    if (it == s.edges.end()) return std::nullopt;
    for (const auto& [from, to] : it->second) {
      if (from != binding[0]) continue;
      binding[var] = to;
      if (auto v = match(s, c, binding, var + 1)) return v;
    }
    return std::nullopt;
  }

  struct Expansion {
    int individual;
    ExistsFact fact;
  };

  // First existential at an unblocked individual with no witness.
  std::optional<Expansion> find_expansion(const State& s,
                                          const Blocking& b) const {
    for (int i = 0; i < s.size(); ++i) {
      if (b.blocked[i]) continue;
      for (const auto& e : s.exists[i]) {
        if (!witnessed(s, i, e)) return Expansion{i, e};
      }
    }
    return std::nullopt;
  }

  bool witnessed(const State& s, int i, const ExistsFact& e) const {
    auto it = s.edges.find(e.first);
    if (it == s.edges.end()) return false;
    for (const auto& [from, to] : it->second) {
      if (from != i) continue;
      if (e.second == "true" || s.concepts[to].count(e.second) > 0) return true;
    }
    return false;
  }

  void apply_head(State& s, const ClauseAtom& a, const std::vector<int>& binding) {
    if (a.kind == ClauseAtom::Kind::Concept) {
      add_concept(s, binding[a.term], a.name);
    } else {
      assert(a.kind == ClauseAtom::Kind::Exists);
      add_exists(s, binding[a.term], {a.name, a.filler});
    }
  }

  static std::string render_binding(const std::vector<int>& binding) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < binding.size(); ++i)
      out << (i ? "," : "") << binding[i];
    out << "]";
    return out.str();
  }

  TraceStep make_step(int clause, const std::vector<int>& binding, int head) {
    TraceStep t;
    t.clause = clause;
    t.binding = binding;
    t.chosen_head = head;
    std::ostringstream out;
    out << "clause " << clause << " " << render_binding(binding);
    if (head >= 0)
      out << " choose " << to_string(cs_.clauses[clause].head[head]);
    else
      out << " clash";
    t.note = out.str();
    return t;
  }

  void record_refutation(const State& s, const TraceStep& last) {
    if (!refutation_.empty()) return;
    refutation_ = s.path;
    refutation_.push_back(last);
  }

  std::optional<KripkeModel> saturate_impl(State s) {
    for (;;) {
      std::optional<std::pair<int, std::vector<int>>> violated;
      for (size_t ci = 0; ci < cs_.clauses.size() && !violated; ++ci) {
        const DLClause& c = cs_.clauses[ci];
        int max_var = 0;
        for (const auto& a : c.body) max_var = std::max({max_var, a.term, a.to});
        for (const auto& a : c.head) max_var = std::max(max_var, a.term);
        std::vector<int> binding(max_var + 1, -1);
        if (auto v = match(s, c, binding, 0))
          violated = {static_cast<int>(ci), v->binding};
      }
      if (violated) {
        auto [ci, binding] = *violated;
        const DLClause& c = cs_.clauses[ci];
        if (c.head.empty()) {
          record_refutation(s, make_step(ci, binding, -1));
          return std::nullopt;
        }
        if (c.head.size() == 1) {
          s.path.push_back(make_step(ci, binding, 0));
          apply_head(s, c.head[0], binding);
          continue;
        }
        for (size_t h = 0; h < c.head.size(); ++h) {
          if (h > 0) ++branches_explored_;
          State branch = s;
          branch.path.push_back(make_step(ci, binding, static_cast<int>(h)));
          apply_head(branch, c.head[h], binding);
          if (auto m = saturate_impl(std::move(branch))) return m;
        }
        return std::nullopt;
      }
      Blocking b = compute_blocking(s);
      auto exp = find_expansion(s, b);
      if (!exp) return extract(s, b);
      const auto& [role, filler] = exp->fact;
      if (filler == "true") {
        // Prefer the world as its own successor, fall back to a fresh one.
        ++branches_explored_;
        State loop = s;
        loop.path.push_back(successor_step(exp->individual, exp->individual, role));
        add_edge(loop, role, exp->individual, exp->individual);
        if (auto m = saturate_impl(std::move(loop))) return m;
        int w = add_individual(s, false, exp->individual, role);
        s.path.push_back(successor_step(exp->individual, w, role));
        add_edge(s, role, exp->individual, w);
        continue;
      }
      int w = add_individual(s, false, exp->individual, role);
      s.path.push_back(successor_step(exp->individual, w, role));
      add_edge(s, role, exp->individual, w);
      add_concept(s, w, filler);
    }
  }

  TraceStep successor_step(int from, int to, const std::string& role) {
    TraceStep t;
    t.binding = {from, to};
    std::ostringstream out;
    out << "successor " << role << ": " << from << " -> " << to;
    t.note = out.str();
    return t;
  }

  const std::string& modality_for(const std::string& role) const {
    auto it = role_modality_.find(role);
    assert(it != role_modality_.end());
    return it->second;
  }

  KripkeModel extract(const State& s, const Blocking& b) const {
    KripkeModel m;
    for (int i = 0; i < s.size(); ++i) {
      if (b.blocked[i]) continue;
      int parent = s.parent[i];
      if (parent >= 0 && b.blocked[parent]) parent = b.blocker[parent];
      m.worlds.push_back({i, s.named[i], parent, s.via_role[i]});
      std::set<std::string>& val = m.valuation[i];
      for (const auto& name : s.concepts[i])
        if (cs_.name_table.find(name) == cs_.name_table.end()) val.insert(name);
    }
    for (const auto& [role, pairs] : s.edges) {
      const std::string& label = modality_for(role);
      for (const auto& [i, j] : pairs) {
        if (b.blocked[i]) continue;
        m.successors[label].insert({i, b.blocked[j] ? b.blocker[j] : j});
      }
    }
    m.designated = 0;
    return m;
  }
};

}  // namespace

HyperResult solve(const ClauseSet& cs, const HyperOptions& opt) {
  Solver s(cs, opt);
  return s.run();
}

namespace {

class ModelChecker {
 public:
  ModelChecker(const KripkeModel& m, const ClauseSet& cs, const HyperOptions& opt)
      : m_(m), cs_(cs) {
    for (size_t k = 0; k < opt.roles.size(); ++k)
      role_modality_.emplace(opt.roles[k], opt.modalities[k].label);
  }

  bool check(std::string* why) {
    for (const auto& w : m_.worlds) world_ids_.push_back(w.id);
    std::sort(world_ids_.begin(), world_ids_.end());
    for (const auto& name : cs_.assertions) {
      if (!holds(name, m_.designated)) {
        if (why) *why = "assertion " + name + " fails at the named world";
        return false;
      }
    }
    for (size_t ci = 0; ci < cs_.clauses.size(); ++ci) {
      const DLClause& c = cs_.clauses[ci];
      int max_var = 0;
      for (const auto& a : c.body) max_var = std::max({max_var, a.term, a.to});
      for (const auto& a : c.head) max_var = std::max(max_var, a.term);
      std::vector<int> binding(max_var + 1, -1);
      if (!check_clause(c, binding, 0, ci, why)) return false;
    }
    for (const auto& [role, label] : role_modality_) {
      (void)role;
      for (int w : world_ids_) {
        if (successors(label, w).empty()) {
          if (why)
            *why = "world " + std::to_string(w) + " lacks a " + label +
                   " successor";
          return false;
        }
      }
    }
    return true;
  }

 private:
  const KripkeModel& m_;
  const ClauseSet& cs_;
  std::map<std::string, std::string> role_modality_;
  std::vector<int> world_ids_;

  std::vector<int> successors(const std::string& label, int w) const {
    std::vector<int> out;
    auto it = m_.successors.find(label);
    if (it == m_.successors.end()) return out;
    for (const auto& [i, j] : it->second)
      if (i == w) out.push_back(j);
    return out;
  }

  // A concept name holds at a world; defined names evaluate through their
  // definitions, source names through the valuation.
  bool holds(const std::string& name, int w) const {
    auto it = cs_.name_table.find(name);
    if (it != cs_.name_table.end()) return eval_concept(it->second, w);
    auto vit = m_.valuation.find(w);
    return vit != m_.valuation.end() && vit->second.count(name) > 0;
  }

  bool eval_concept(const Concept& c, int w) const {
    switch (c.kind()) {
      case ConceptKind::Top:
        return true;
      case ConceptKind::Bottom:
        return false;
      case ConceptKind::Name:
        return holds(c.name_str(), w);
      case ConceptKind::Not:
        return !eval_concept(c.child(), w);
      case ConceptKind::And:
        return eval_concept(c.left(), w) && eval_concept(c.right(), w);
      case ConceptKind::Or:
        return eval_concept(c.left(), w) || eval_concept(c.right(), w);
      case ConceptKind::All: {
        auto it = role_modality_.find(c.role());
        assert(it != role_modality_.end());
        for (int j : successors(it->second, w))
          if (!eval_concept(c.child(), j)) return false;
        return true;
      }
      case ConceptKind::Some: {
        auto it = role_modality_.find(c.role());
        assert(it != role_modality_.end());
        for (int j : successors(it->second, w))
          if (eval_concept(c.child(), j)) return true;
        return false;
      }
    }
    return false;
  }

  bool atom_holds(const ClauseAtom& a, const std::vector<int>& binding) const {
    switch (a.kind) {
      case ClauseAtom::Kind::Concept:
        return holds(a.name, binding[a.term]);
      case ClauseAtom::Kind::Role: {
        auto it = role_modality_.find(a.name);
        assert(it != role_modality_.end());
        auto sit = m_.successors.find(it->second);
        return sit != m_.successors.end() &&
               sit->second.count({binding[a.term], binding[a.to]}) > 0;
      }
      case ClauseAtom::Kind::Exists: {
        auto it = role_modality_.find(a.name);
        assert(it != role_modality_.end());
        for (int j : successors(it->second, binding[a.term]))
          if (a.filler == "true" || holds(a.filler, j)) return true;
        return false;
      }
    }
    return false;
  }

  bool check_clause(const DLClause& c, std::vector<int>& binding, int var,
                    size_t ci, std::string* why) const {
    if (var == static_cast<int>(binding.size())) {
      for (const auto& a : c.body)
        if (!atom_holds(a, binding)) return true;
      for (const auto& a : c.head)
        if (atom_holds(a, binding)) return true;
      if (why) {
        std::ostringstream out;
        out << "clause " << ci << " (" << to_string(c) << ") fails at [";
        for (size_t i = 0; i < binding.size(); ++i)
          out << (i ? "," : "") << binding[i];
        out << "]";
        *why = out.str();
      }
      return false;
    }
    for (int w : world_ids_) {
      binding[var] = w;
      if (!check_clause(c, binding, var + 1, ci, why)) return false;
    }
    return true;
  }
};

}  // namespace

bool model_check(const KripkeModel& m, const ClauseSet& cs,
                 const HyperOptions& opt, std::string* why) {
  ModelChecker c(m, cs, opt);
  return c.check(why);
}

}  // namespace deon
