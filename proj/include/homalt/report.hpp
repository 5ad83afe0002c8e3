#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homalt/rational.hpp"

namespace homalt {

/// First violating basis tuple (lexicographic order) and its defect vector.
/// Declaration-level failures carry an empty index tuple and defect {1}.
struct Witness {
  std::vector<std::size_t> indices;
  Vec defect;
};

struct AxiomEntry {
  std::string name;
  bool holds = true;
  std::optional<Witness> witness;  // present exactly when holds is false
};

struct AxiomReport {
  std::vector<AxiomEntry> entries;

  bool all_hold() const {
    for (const AxiomEntry& e : entries)
      if (!e.holds) return false;
    return true;
  }

  const AxiomEntry* find(std::string_view name) const {
    for (const AxiomEntry& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  AxiomReport& append(AxiomReport other) {
    for (AxiomEntry& e : other.entries) entries.push_back(std::move(e));
    return *this;
  }
};

}  // namespace homalt
