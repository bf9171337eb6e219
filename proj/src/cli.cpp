#include "deon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "deon/alc.hpp"
#include "deon/analysis.hpp"
#include "deon/errors.hpp"
#include "deon/oracle.hpp"
#include "deon/parse.hpp"

namespace deon::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitDisagreement = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Query::Kind query_kind_for(Command c) {
  switch (c) {
    case Command::check:
      return Query::Kind::consistency;
    case Command::turn:
      return Query::Kind::must_check;
    case Command::obligations:
      return Query::Kind::obligations;
    case Command::model:
      return Query::Kind::find_model;
    default:
      return Query::Kind::consistency;
  }
}

const Query* file_query(const Problem& p, Command c) {
  Query::Kind k = query_kind_for(c);
  for (const auto& q : p.queries)
    if (q.kind == k) return &q;
  return nullptr;
}

ordered_json model_json(const KripkeModel& m) {
  ordered_json j;
  j["designated"] = m.designated;
  j["worlds"] = ordered_json::array();
  for (const auto& w : m.worlds) {
    ordered_json jw;
    jw["id"] = w.id;
    jw["named"] = w.named;
    jw["atoms"] = ordered_json::array();
    if (auto it = m.valuation.find(w.id); it != m.valuation.end())
      for (const auto& a : it->second) jw["atoms"].push_back(a);
    j["worlds"].push_back(std::move(jw));
  }
  j["edges"] = ordered_json::object();
  for (const auto& [label, pairs] : m.successors) {
    ordered_json je = ordered_json::array();
    for (const auto& [a, b] : pairs) je.push_back(ordered_json::array({a, b}));
    j["edges"][label] = std::move(je);
  }
  return j;
}

ordered_json boxed_json(const std::vector<BoxedLiteral>& xs, bool diamond = false) {
  ordered_json j = ordered_json::array();
  for (const auto& x : xs) j.push_back(to_string(x, diamond));
  return j;
}

ordered_json trace_json(const std::vector<TraceStep>& steps) {
  ordered_json j = ordered_json::array();
  for (const auto& s : steps) j.push_back(s.note);
  return j;
}

void print_trace(std::ostream& out, const std::vector<TraceStep>& steps) {
  if (steps.empty()) return;
  out << "refutation:\n";
  for (const auto& s : steps) out << "  " << s.note << "\n";
}

void print_model(std::ostream& out, const KripkeModel& m, const Problem& p) {
  out << to_string(m, p.atom_names());
}

Engine resolve_engine(const RunConfig& cfg, const Query* q) {
  if (cfg.engine) return *cfg.engine;
  if (q && q->engine) return *q->engine;
  return Engine::both;
}

SolveLimits limits_of(const RunConfig& cfg) {
  return {cfg.max_individuals, cfg.max_facts};
}

int run_check(const RunConfig& cfg, const Problem& p, const Query* q,
              std::ostream& out) {
  ConsistencyResult r = check_consistency(p, resolve_engine(cfg, q), limits_of(cfg));
  if (cfg.output == OutputMode::structured) {
    ordered_json j;
    j["answer"] = r.consistent ? "consistent" : "inconsistent";
    j["model"] = r.model ? model_json(*r.model) : ordered_json(nullptr);
    j["refutation"] = trace_json(r.refutation);
    out << j.dump(2) << "\n";
  } else if (r.consistent) {
    out << "consistent\n";
    if (r.model) print_model(out, *r.model, p);
  } else {
    out << "inconsistent\n";
    print_trace(out, r.refutation);
  }
  return r.consistent ? kExitYes : kExitNo;
}

int run_turn(const RunConfig& cfg, const Problem& p, const Query* q,
             std::ostream& out) {
  std::optional<Formula> f;
  ModalityId m = kDefaultModality;
  if (cfg.formula) {
    f = parse_formula(*cfg.formula, p);
  } else if (q && q->formula) {
    f = q->formula;
    m = q->modality;
  }
  if (!f) throw ValidationError("turn needs an obligation literal");
  if (f->kind() == Connective::Box) {
    m = f->modality();
    f = f->child();
  }
  if (!is_literal(*f))
    throw ValidationError("turn takes a literal, got: " + to_string(*f));
  SignedLiteral lit = to_signed_literal(*f);
  TurnResult r = must_check(p, m, lit, resolve_engine(cfg, q), limits_of(cfg));
  BoxedLiteral ob{m, lit};
  if (cfg.output == OutputMode::structured) {
    ordered_json j;
    j["answer"] = r.answer == Answer::Yes  ? "yes"
                  : r.answer == Answer::No ? "no"
                                           : "inconsistent";
    j["obligation"] = to_string(ob);
    j["model"] = r.countermodel ? model_json(*r.countermodel) : ordered_json(nullptr);
    j["refutation"] = trace_json(r.refutation);
    out << j.dump(2) << "\n";
  } else if (r.answer == Answer::Yes) {
    out << "yes\n";
    out << "verify " << to_string(ob) << ": adding "
        << to_string(BoxedLiteral{m, lit.complement()}, true)
        << " makes the knowledge base unsatisfiable\n";
    print_trace(out, r.refutation);
  } else if (r.answer == Answer::No) {
    out << "no\n";
    out << to_string(ob) << " is not forced; a compliant world violating it exists\n";
    if (r.countermodel) print_model(out, *r.countermodel, p);
  } else {
    out << "inconsistent\n";
    out << "the knowledge base itself is unsatisfiable\n";
  }
  return r.answer == Answer::Yes ? kExitYes : kExitNo;
}

int run_obligations(const RunConfig& cfg, const Problem& p, std::ostream& out) {
  CheatReport r = detect(p);
  auto set_json = [](const std::vector<BoxedLiteral>& s) { return boxed_json(s); };
  if (cfg.output == OutputMode::structured) {
    ordered_json j;
    j["answer"] = r.verdict == CheatReport::Verdict::MustCheck ? "must_check"
                  : r.verdict == CheatReport::Verdict::NoCheckNeeded
                      ? "no_check_needed"
                      : "inconsistent";
    j["must_check"] = set_json(r.must_check);
    j["minimal_sets"] = ordered_json::array();
    for (const auto& s : r.minimal_sets) j["minimal_sets"].push_back(set_json(s));
    j["diamonds"] = boxed_json(r.diamonds, true);
    j["open_branches"] = r.open_branches;
    j["closed_branches"] = r.closed_branches;
    out << j.dump(2) << "\n";
    return r.verdict == CheatReport::Verdict::Inconsistent ? kExitNo : kExitYes;
  }
  switch (r.verdict) {
    case CheatReport::Verdict::Inconsistent:
      out << "inconsistent\n";
      out << "every branch closes; the observation violates the norms outright\n";
      return kExitNo;
    case CheatReport::Verdict::NoCheckNeeded:
      out << "no check needed\n";
      out << "some open branch carries no obligation\n";
      return kExitYes;
    case CheatReport::Verdict::MustCheck:
      break;
  }
  out << "must check\n";
  if (r.must_check.empty()) {
    out << "no obligation is shared by all minimal sets; choose one set to verify\n";
  } else {
    out << "check: ";
    for (size_t i = 0; i < r.must_check.size(); ++i)
      out << (i ? ", " : "") << to_string(r.must_check[i]);
    out << "\n";
  }
  out << "minimal boxed sets:\n";
  for (const auto& s : r.minimal_sets) {
    out << "  {";
    for (size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << to_string(s[i]);
    out << "}\n";
  }
  if (!r.diamonds.empty()) {
    out << "permitted on open branches: ";
    for (size_t i = 0; i < r.diamonds.size(); ++i)
      out << (i ? ", " : "") << to_string(r.diamonds[i], true);
    out << "\n";
  }
  return kExitYes;
}

int run_model(const RunConfig& cfg, const Problem& p, const Query* q,
              std::ostream& out) {
  Engine e = resolve_engine(cfg, q);
  if (e == Engine::tableau)
    throw ValidationError("model queries are answered by the hypertableau engine");
  std::optional<Formula> goal;
  if (cfg.formula)
    goal = parse_formula(*cfg.formula, p);
  else if (q && q->formula)
    goal = q->formula;
  ModelReport r = find_model(p, goal, e, limits_of(cfg));
  if (cfg.output == OutputMode::structured) {
    ordered_json j;
    j["answer"] = r.answer == Answer::Yes ? "yes" : "no";
    j["model"] = r.model ? model_json(*r.model) : ordered_json(nullptr);
    j["obligations"] = boxed_json(r.obligations);
    j["unverifiable"] = boxed_json(r.unverifiable);
    out << j.dump(2) << "\n";
    return r.answer == Answer::Yes ? kExitYes : kExitNo;
  }
  if (r.answer != Answer::Yes) {
    out << "no\n";
    out << "no model satisfies the knowledge base"
        << (goal ? " with the goal" : "") << "\n";
    return kExitNo;
  }
  out << "yes\n";
  print_model(out, *r.model, p);
  if (!r.obligations.empty()) {
    out << "obligations at the observed world:\n";
    for (const auto& ob : r.obligations) {
      bool uv = std::find(r.unverifiable.begin(), r.unverifiable.end(), ob) !=
                r.unverifiable.end();
      out << "  " << to_string(ob) << (uv ? "  [unverifiable]" : "") << "\n";
    }
  }
  return kExitYes;
}

int run_tableau(const RunConfig& cfg, const Problem& p, std::ostream& out) {
  Tableau t = build_problem_tableau(p);
  if (cfg.output == OutputMode::structured) {
    ordered_json j;
    j["nodes"] = ordered_json::array();
    for (size_t i = 0; i < t.nodes.size(); ++i) {
      ordered_json jn;
      jn["id"] = i;
      jn["label"] = t.nodes[i].label;
      jn["closes"] = t.nodes[i].closes;
      j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = ordered_json::array();
    for (size_t i = 1; i < t.nodes.size(); ++i)
      j["edges"].push_back(ordered_json::array({t.nodes[i].parent, static_cast<int>(i)}));
    j["branches"] = ordered_json::array();
    for (const auto& b : t.branches) {
      ordered_json jb;
      jb["literals"] = ordered_json::array();
      for (const auto& l : b.literals) jb["literals"].push_back(to_string(l));
      jb["boxed"] = boxed_json(b.boxed);
      jb["diamonds"] = boxed_json(b.diamonds, true);
      jb["open"] = b.open;
      j["branches"].push_back(std::move(jb));
    }
    j["dot"] = to_dot(t);
    out << j.dump(2) << "\n";
  } else {
    out << to_text(t);
  }
  return t.open_count() > 0 ? kExitYes : kExitNo;
}

int run_translate(const RunConfig& cfg, const Problem& p, std::ostream& out) {
  Translation t = translate(p);
  ClauseSet cs = clausify(t);
  if (cfg.output == OutputMode::structured) {
    ordered_json j;
    j["world_concepts"] = ordered_json::array();
    for (const auto& c : t.world_concepts)
      j["world_concepts"].push_back(to_string(c));
    j["tbox"] = ordered_json::array();
    for (const auto& c : t.tbox) j["tbox"].push_back("true [= " + to_string(c));
    j["clauses"] = ordered_json::array();
    for (const auto& c : cs.clauses) j["clauses"].push_back(to_string(c));
    j["assertions"] = ordered_json::array();
    for (const auto& a : cs.assertions) j["assertions"].push_back(a + "(a0)");
    out << j.dump(2) << "\n";
  } else {
    out << to_string(t);
    out << "clauses:\n";
    for (const auto& c : cs.clauses) out << "  " << to_string(c) << "\n";
    out << "assertions:\n";
    for (const auto& a : cs.assertions) out << "  " << a << "(a0)\n";
  }
  return kExitYes;
}

int run_oracle(const RunConfig& cfg, const Problem& p, std::ostream& out) {
  OracleConfig oc;
  oc.atoms = p.atom_names();
  oc.modalities = p.modalities;
  oc.max_worlds = cfg.oracle_max_worlds;
  std::vector<Formula> fs = tableau_formulas(p);
  OracleResult r = oracle_sat(fs, oc);
  if (cfg.output == OutputMode::structured) {
    ordered_json j;
    j["answer"] = r.satisfiable ? "sat" : "unsat";
    j["model"] = r.model ? model_json(*r.model) : ordered_json(nullptr);
    j["structures_checked"] = r.structures_checked;
    out << j.dump(2) << "\n";
  } else {
    out << (r.satisfiable ? "sat" : "unsat") << "\n";
    if (r.model) print_model(out, *r.model, p);
    out << "structures checked: " << r.structures_checked << "\n";
  }
  return r.satisfiable ? kExitYes : kExitNo;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Problem p = parse_problem(read_file(cfg.input_path));
    if (cfg.contrapose) p.contrapose = true;
    if (cfg.tbox_constraints) p.tbox_constraints = true;
    p.finalize();
    const Query* q = file_query(p, cfg.command);
    switch (cfg.command) {
      case Command::check:
        return run_check(cfg, p, q, out);
      case Command::turn:
        return run_turn(cfg, p, q, out);
      case Command::obligations:
        return run_obligations(cfg, p, out);
      case Command::model:
        return run_model(cfg, p, q, out);
      case Command::tableau:
        return run_tableau(cfg, p, out);
      case Command::translate:
        return run_translate(cfg, p, out);
      case Command::oracle:
        return run_oracle(cfg, p, out);
    }
    err << "unknown command\n";
    return kExitUsage;
  } catch (const GuardExceededError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ResourceLimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const EngineDisagreementError& e) {
    err << "engine disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace deon::cli
