#include "deon/oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <unordered_map>

#include "deon/errors.hpp"

namespace deon {

namespace {

// Formulas compiled to a postorder op array so candidate structures are
// evaluated without tree walks or allocation.
struct Op {
  Connective kind;
  int atom = -1;      // Atom
  int modality = -1;  // Box / Diamond
  int a = -1;         // operand indices
  int b = -1;
};

struct Compiled {
  std::vector<Op> ops;
  std::vector<int> roots;
};

int compile_into(const Formula& f, const OracleConfig& cfg, std::unordered_map<Formula, int>& seen,
                 Compiled& out) {
  if (auto it = seen.find(f); it != seen.end()) return it->second;
  Op op{f.kind()};
  switch (f.kind()) {
    case Connective::Top:
    case Connective::Bottom:
      break;
    case Connective::Atom: {
      for (std::size_t i = 0; i < cfg.atoms.size(); ++i)
        if (cfg.atoms[i] == f.atom_id().name) op.atom = static_cast<int>(i);
      if (op.atom < 0)
        throw ValidationError("oracle: atom not in config: " + f.atom_id().name);
      break;
    }
    case Connective::Not:
      op.a = compile_into(f.child(), cfg, seen, out);
      break;
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      op.a = compile_into(f.left(), cfg, seen, out);
      op.b = compile_into(f.right(), cfg, seen, out);
      break;
    case Connective::Box:
    case Connective::Diamond: {
      for (std::size_t i = 0; i < cfg.modalities.size(); ++i)
        if (cfg.modalities[i] == f.modality()) op.modality = static_cast<int>(i);
      if (op.modality < 0)
        throw ValidationError("oracle: modality not in config: " + f.modality().label);
      op.a = compile_into(f.child(), cfg, seen, out);
      break;
    }
  }
  out.ops.push_back(op);
  const int idx = static_cast<int>(out.ops.size()) - 1;
  seen.emplace(f, idx);
  return idx;
}

std::vector<std::uint32_t> serial_masks(int k) {
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = 1u << (k * k);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool serial = true;
    for (int w = 0; w < k && serial; ++w) {
      const std::uint32_t row = (mask >> (w * k)) & ((1u << k) - 1);
      serial = row != 0;
    }
    if (serial) out.push_back(mask);
  }
  return out;
}

}  // namespace

OracleResult oracle_sat(std::span<const Formula> formulas, const OracleConfig& cfg) {
  if (static_cast<int>(cfg.atoms.size()) > OracleConfig::kMaxAtomsGuard)
    throw GuardExceededError("oracle guard: " + std::to_string(cfg.atoms.size()) +
                             " atoms exceeds " + std::to_string(OracleConfig::kMaxAtomsGuard));
  if (cfg.max_worlds < 1 || cfg.max_worlds > OracleConfig::kMaxWorldsGuard)
    throw GuardExceededError("oracle guard: max_worlds " + std::to_string(cfg.max_worlds) +
                             " outside 1.." + std::to_string(OracleConfig::kMaxWorldsGuard));

  Compiled compiled;
  {
    std::unordered_map<Formula, int> seen;
    for (const auto& f : formulas)
      compiled.roots.push_back(compile_into(f, cfg, seen, compiled));
  }

  const int n = static_cast<int>(cfg.atoms.size());
  const int m = static_cast<int>(cfg.modalities.size());
  OracleResult result;

  // truth[op][world], rebuilt per candidate.
  std::vector<std::array<bool, 4>> truth(compiled.ops.size());

  for (int k = 1; k <= cfg.max_worlds; ++k) {
    const auto masks = serial_masks(k);
    const std::uint64_t valuations = 1ull << (k * n);
    std::vector<std::size_t> dial(m, 0);  // mask index per modality

    for (std::uint64_t V = 0; V < valuations; ++V) {
      std::fill(dial.begin(), dial.end(), 0);
      while (true) {
        ++result.structures_checked;
        bool ok = true;
        for (std::size_t i = 0; i < compiled.ops.size(); ++i) {
          const Op& op = compiled.ops[i];
          for (int w = 0; w < k; ++w) {
            bool v = false;
            switch (op.kind) {
              case Connective::Top:
                v = true;
                break;
              case Connective::Bottom:
                v = false;
                break;
              case Connective::Atom:
                v = (V >> (w * n + op.atom)) & 1;
                break;
              case Connective::Not:
                v = !truth[op.a][w];
                break;
              case Connective::And:
                v = truth[op.a][w] && truth[op.b][w];
                break;
              case Connective::Or:
                v = truth[op.a][w] || truth[op.b][w];
                break;
              case Connective::Implies:
                v = !truth[op.a][w] || truth[op.b][w];
                break;
              case Connective::Box: {
                const std::uint32_t row = masks[dial[op.modality]] >> (w * k);
                v = true;
                for (int s = 0; s < k; ++s)
                  if ((row >> s) & 1) v = v && truth[op.a][s];
                break;
              }
              case Connective::Diamond: {
                const std::uint32_t row = masks[dial[op.modality]] >> (w * k);
                v = false;
                for (int s = 0; s < k; ++s)
                  if ((row >> s) & 1) v = v || truth[op.a][s];
                break;
              }
            }
            truth[i][w] = v;
          }
        }
        for (int root : compiled.roots) ok = ok && truth[root][0];

        if (ok) {
          KripkeModel model;
          model.designated = 0;
          for (int w = 0; w < k; ++w) {
            model.worlds.push_back(Individual{w, w == 0, -1, {}});
            auto& val = model.valuation[w];
            for (int a = 0; a < n; ++a)
              if ((V >> (w * n + a)) & 1) val.insert(cfg.atoms[a]);
          }
          for (int mi = 0; mi < m; ++mi) {
            auto& edges = model.successors[cfg.modalities[mi].label];
            const std::uint32_t mask = masks[dial[mi]];
            for (int w = 0; w < k; ++w)
              for (int s = 0; s < k; ++s)
                if ((mask >> (w * k + s)) & 1) edges.insert({w, s});
          }
          result.satisfiable = true;
          result.model = std::move(model);
          return result;
        }

        // Advance the relation dial, last modality fastest.
        int pos = m - 1;
        while (pos >= 0) {
          if (++dial[pos] < masks.size()) break;
          dial[pos] = 0;
          --pos;
        }
        if (pos < 0) break;  // all relation combinations done (or m == 0)
      }
    }
  }
  return result;
}

}  // namespace deon
