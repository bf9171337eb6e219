#pragma once

#include <optional>
#include <string>
#include <vector>

namespace deon {

// `partition n: 4|7` declares a site with mutually exclusive, jointly
// exhaustive values and generates one atom c(site,value) per value.
struct Partition {
  std::string site;
  std::vector<std::string> values;  // >= 2, unique

  static std::string atom_name(const std::string& site, const std::string& value) {
    return "c(" + site + "," + value + ")";
  }

  std::vector<std::string> atom_names() const {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(atom_name(site, v));
    return out;
  }

  bool operator==(const Partition&) const = default;
};

// The other atom of a two-element partition owning `atom`, if any.
std::optional<std::string> partition_complement(const std::vector<Partition>& partitions,
                                                const std::string& atom);

}  // namespace deon
