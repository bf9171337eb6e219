#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "deon/formula.hpp"

namespace deon {

// World identity. The hypertableau engine creates fresh individuals as
// successors (forming a forest rooted at the named one); the oracle's
// enumerated worlds carry no parent.
struct Individual {
  int id = 0;
  bool named = false;  // the observed individual a0
  int parent = -1;     // creating individual for fresh ones, -1 otherwise
  std::string via_role;

  bool operator==(const Individual&) const = default;
};

struct KripkeModel {
  std::vector<Individual> worlds;
  // World id -> atoms true there. Only source atoms; auxiliary concept
  // names from clausification are resolved through their definitions.
  std::map<int, std::set<std::string>> valuation;
  // Modality label -> edge set.
  std::map<std::string, std::set<std::pair<int, int>>> successors;
  int designated = 0;

  bool has_edge(const std::string& modality, int from, int to) const {
    auto it = successors.find(modality);
    return it != successors.end() && it->second.count({from, to}) > 0;
  }
  bool holds(int world, const std::string& atom) const {
    auto it = valuation.find(world);
    return it != valuation.end() && it->second.count(atom) > 0;
  }
};

// Standard Kripke satisfaction at a world; Box quantifies over the
// modality's successor set (vacuously true without successors).
bool eval(const KripkeModel& model, int world, const Formula& f);

// Every world has at least one successor per given modality.
bool is_serial(const KripkeModel& model, const std::vector<ModalityId>& modalities);

// Text listing: `world i: {atoms}` lines then `r_m: i -> j` lines.
std::string to_string(const KripkeModel& model, const std::vector<std::string>& atom_order);

}  // namespace deon
