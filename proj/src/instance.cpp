#include "dpp/instance.hpp"

#include <stdexcept>
#include <unordered_set>

namespace dpp {

void validate_terminals(const Instance& inst) {
  std::unordered_set<VertexId> seen;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    for (VertexId v : {inst.pairs[i].source, inst.pairs[i].target}) {
      if (!inst.graph.valid(v)) {
        throw std::invalid_argument("pair " + std::to_string(i) + ": terminal " +
                                    std::to_string(v) + " out of range");
      }
      if (!seen.insert(v).second) {
        throw std::invalid_argument("pair " + std::to_string(i) + ": terminal " +
                                    std::to_string(v) + " is not distinct");
      }
    }
  }
}

std::string linkage_defect(const Instance& inst, const Linkage& l) {
  if (l.paths.size() != inst.pairs.size()) {
    return "expected " + std::to_string(inst.pairs.size()) + " paths, got " +
           std::to_string(l.paths.size());
  }
  std::unordered_set<VertexId> used;
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    const Path& p = l.paths[i];
    if (auto defect = path_defect(inst.graph, p); !defect.empty()) {
      return "path " + std::to_string(i) + ": " + defect;
    }
    if (p.front() != inst.pairs[i].source || p.back() != inst.pairs[i].target) {
      return "path " + std::to_string(i) + " does not join its terminals";
    }
    for (VertexId v : p.vertices) {
      if (!used.insert(v).second) {
        return "path " + std::to_string(i) + " shares vertex " + std::to_string(v);
      }
    }
  }
  return {};
}

}  // namespace dpp
