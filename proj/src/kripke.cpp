#include "deon/kripke.hpp"

#include <algorithm>
#include <cassert>

namespace deon {

bool eval(const KripkeModel& model, int world, const Formula& f) {
  switch (f.kind()) {
    case Connective::Top:
      return true;
    case Connective::Bottom:
      return false;
    case Connective::Atom:
      return model.holds(world, f.atom_id().name);
    case Connective::Not:
      return !eval(model, world, f.child());
    case Connective::And:
      return eval(model, world, f.left()) && eval(model, world, f.right());
    case Connective::Or:
      return eval(model, world, f.left()) || eval(model, world, f.right());
    case Connective::Implies:
      return !eval(model, world, f.left()) || eval(model, world, f.right());
    case Connective::Box: {
      auto it = model.successors.find(f.modality().label);
      if (it == model.successors.end()) return true;
      for (const auto& [from, to] : it->second)
        if (from == world && !eval(model, to, f.child())) return false;
      return true;
    }
    case Connective::Diamond: {
      auto it = model.successors.find(f.modality().label);
      if (it == model.successors.end()) return false;
      for (const auto& [from, to] : it->second)
        if (from == world && eval(model, to, f.child())) return true;
      return false;
    }
  }
  assert(false && "unreachable connective");
  return false;
}

bool is_serial(const KripkeModel& model, const std::vector<ModalityId>& modalities) {
  for (const auto& m : modalities) {
    auto it = model.successors.find(m.label);
    for (const auto& w : model.worlds) {
      bool found = false;
      if (it != model.successors.end())
        for (const auto& [from, to] : it->second)
          if (from == w.id) {
            found = true;
            break;
          }
      if (!found) return false;
    }
  }
  return true;
}

std::string to_string(const KripkeModel& model, const std::vector<std::string>& atom_order) {
  std::string out;
  for (const auto& w : model.worlds) {
    out += "world " + std::to_string(w.id) + ": {";
    bool first = true;
    auto vit = model.valuation.find(w.id);
    if (vit != model.valuation.end()) {
      for (const auto& atom : atom_order) {
        if (!vit->second.count(atom)) continue;
        if (!first) out += ", ";
        out += atom;
        first = false;
      }
      // Atoms outside the declared order (defensive; keeps listing total).
      for (const auto& atom : vit->second) {
        if (std::find(atom_order.begin(), atom_order.end(), atom) != atom_order.end()) continue;
        if (!first) out += ", ";
        out += atom;
        first = false;
      }
    }
    out += "}";
    if (w.named) out += "  (a0)";
    out += "\n";
  }
  for (const auto& [label, edges] : model.successors) {
    const std::string role = label == kDefaultModality.label ? "r" : "r_" + label;
    for (const auto& [from, to] : edges)
      out += role + ": " + std::to_string(from) + " -> " + std::to_string(to) + "\n";
  }
  return out;
}

}  // namespace deon
