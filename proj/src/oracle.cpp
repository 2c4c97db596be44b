#include "dpp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpp {

namespace {

using Mask = std::uint64_t;

struct MaskedPath {
  Mask mask;
  Path path;
};

void all_simple_paths(const Graph& g, VertexId target, Mask blocked, std::vector<VertexId>& stack,
                      Mask on_stack, std::vector<MaskedPath>& out) {
  const VertexId head = stack.back();
  if (head == target) {
    out.push_back({on_stack, Path{stack}});
    return;
  }
  for (VertexId w : g.neighbors(head)) {
    const Mask bit = Mask{1} << w;
    if ((on_stack & bit) || ((blocked & bit) && w != target)) continue;
    stack.push_back(w);
    all_simple_paths(g, target, blocked, stack, on_stack | bit, out);
    stack.pop_back();
  }
}

void combine(const std::vector<std::vector<MaskedPath>>& options, std::size_t i, Mask used,
             std::vector<Path>& acc, std::vector<Linkage>& out) {
  if (i == options.size()) {
    out.push_back(Linkage{acc});
    return;
  }
  for (const MaskedPath& mp : options[i]) {
    if (mp.mask & used) continue;
    acc.push_back(mp.path);
    combine(options, i + 1, used | mp.mask, acc, out);
    acc.pop_back();
  }
}

}  // namespace

SolveOutcome brute_force_oracle(const Instance& inst, bool require_spanning) {
  const auto start = std::chrono::steady_clock::now();
  validate_terminals(inst);
  if (inst.graph.vertex_count() > 64) {
    throw std::invalid_argument("brute_force_oracle supports at most 64 vertices");
  }
  Mask terminals = 0;
  for (const auto& p : inst.pairs) terminals |= (Mask{1} << p.source) | (Mask{1} << p.target);

  std::vector<std::vector<MaskedPath>> per_pair;
  for (const auto& p : inst.pairs) {
    std::vector<MaskedPath> paths;
    std::vector<VertexId> stack{p.source};
    all_simple_paths(inst.graph, p.target, terminals, stack, Mask{1} << p.source, paths);
    std::sort(paths.begin(), paths.end(),
              [](const MaskedPath& a, const MaskedPath& b) { return a.path < b.path; });
    per_pair.push_back(std::move(paths));
  }

  SolveOutcome out;
  std::vector<Linkage> all;
  std::vector<Path> acc;
  combine(per_pair, 0, 0, acc, all);
  const auto n = inst.graph.vertex_count();
  for (auto& l : all) {
    if (require_spanning) {
      std::size_t covered = 0;
      for (const Path& p : l.paths) covered += p.size();
      if (covered != static_cast<std::size_t>(n)) continue;
    }
    out.solutions.push_back(std::move(l));
  }
  out.nodes_explored = all.size();
  out.status = out.solutions.empty() ? SolveStatus::unsolvable : SolveStatus::solvable;
  out.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace dpp
