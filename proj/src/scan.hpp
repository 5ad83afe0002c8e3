#pragma once

#include <string>
#include <vector>

#include "homalt/report.hpp"

namespace homalt::detail {

// Evaluates a defect function on all basis tuples of the given arity in
// lexicographic order; the first nonzero defect becomes the witness.
template <class DefectFn>
AxiomEntry scan(std::string name, std::size_t dim, std::size_t arity, DefectFn&& defect) {
  AxiomEntry entry{std::move(name), true, std::nullopt};
  if (dim == 0) return entry;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    Vec d = defect(idx);
    if (!is_zero(d)) {
      entry.holds = false;
      entry.witness = Witness{idx, std::move(d)};
      return entry;
    }
    std::size_t pos = arity;
    while (pos > 0) {
      if (++idx[pos - 1] < dim) break;
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return entry;
}

}  // namespace homalt::detail
