#include "dpp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace dpp {

namespace {

using Clock = std::chrono::steady_clock;

enum : std::uint8_t { kFree = 0, kUsed = 1, kGone = 2 };

class Search {
 public:
  Search(const Instance& inst, SolveMode mode, const SolveOptions& options)
      : graph_(inst.graph),
        pairs_(inst.pairs),
        mode_(mode),
        options_(options),
        state_(static_cast<std::size_t>(graph_.vertex_count()), kFree),
        component_(state_.size(), -1),
        on_path_(state_.size(), false),
        pair_of_(state_.size(), -1),
        start_(Clock::now()) {
    for (VertexId v : options.forbidden) {
      if (!graph_.valid(v)) throw std::invalid_argument("forbidden vertex out of range");
      state_[v] = kGone;
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& p = pairs_[i];
      pair_of_[p.source] = pair_of_[p.target] = static_cast<int>(i);
      for (VertexId t : {p.source, p.target}) {
        if (state_[t] == kGone) throw std::invalid_argument("terminal is forbidden");
        state_[t] = kUsed;
      }
    }
    free_count_ = static_cast<std::size_t>(std::count(state_.begin(), state_.end(), kFree));
  }

  SolveOutcome run() {
    SolveOutcome out;
    if (pairs_.empty()) {
      if (!options_.require_spanning || free_count_ == 0) found_.emplace_back();
    } else if (feasible(pairs_[0].source, 0)) {
      current_.push_back(pairs_[0].source);
      on_path_[pairs_[0].source] = true;
      extend(0);
    }
    out.solutions = std::move(found_);
    std::sort(out.solutions.begin(), out.solutions.end());
    out.nodes_explored = nodes_;
    out.wall_time = Clock::now() - start_;
    if (aborted_ && !(mode_.kind == SolveMode::Kind::decide && !out.solutions.empty())) {
      out.status = SolveStatus::aborted;
    } else {
      out.status = out.solutions.empty() ? SolveStatus::unsolvable : SolveStatus::solvable;
    }
    return out;
  }

 private:
  bool done() const { return aborted_ || found_.size() >= mode_.cap; }

  bool witness_only() const {
    return options_.pruning && mode_.kind == SolveMode::Kind::decide && !options_.require_spanning;
  }

  // w touches the current path somewhere other than at its head.
  bool has_chord(VertexId w, VertexId head) const {
    for (VertexId x : graph_.neighbors(w)) {
      if (x != head && on_path_[x]) return true;
    }
    return false;
  }

  bool tick() {
    ++nodes_;
    if (nodes_ > options_.budget.max_nodes) aborted_ = true;
    if ((nodes_ & 1023) == 0 && Clock::now() - start_ > options_.budget.max_time) aborted_ = true;
    return !aborted_;
  }

  // Depth-first extension of pair `i`, whose partial path is current_.
  void extend(std::size_t i) {
    if (!tick()) return;
    const VertexId head = current_.back();
    const VertexId target = pairs_[i].target;
    // A witness for decide can always be shortcut to chordless paths, which
    // only frees vertices for the other pairs.
    const bool chordless = witness_only();
    if (chordless && graph_.has_edge(head, target)) {
      current_.push_back(target);
      finish_pair(i);
      current_.pop_back();
      return;
    }
    for (VertexId w : graph_.neighbors(head)) {
      if (done()) return;
      if (chordless && w != target && has_chord(w, head)) continue;
      if (w == target) {
        current_.push_back(w);
        finish_pair(i);
        current_.pop_back();
      } else if (state_[w] == kFree) {
        state_[w] = kUsed;
        on_path_[w] = true;
        --free_count_;
        current_.push_back(w);
        if (feasible(w, i)) extend(i);
        current_.pop_back();
        ++free_count_;
        on_path_[w] = false;
        state_[w] = kFree;
      }
    }
  }

  void finish_pair(std::size_t i) {
    paths_.push_back(Path{current_});
    if (i + 1 == pairs_.size()) {
      if (!options_.require_spanning || free_count_ == 0) {
        found_.push_back(Linkage{paths_});
      }
    } else {
      std::vector<VertexId> saved;
      saved.swap(current_);
      for (VertexId v : saved) on_path_[v] = false;
      current_.push_back(pairs_[i + 1].source);
      on_path_[pairs_[i + 1].source] = true;
      if (feasible(pairs_[i + 1].source, i + 1)) extend(i + 1);
      on_path_[pairs_[i + 1].source] = false;
      current_.swap(saved);
      for (std::size_t j = 0; j + 1 < current_.size(); ++j) on_path_[current_[j]] = true;
    }
    paths_.pop_back();
  }

  // Residual reachability: every unfinished pair must still be joinable
  // through free vertices, and in spanning mode every free component must be
  // claimable by a distinct unfinished pair (a path's interior lies within a
  // single free component).
  bool feasible(VertexId head, std::size_t current_pair) {
    if (!options_.pruning) return true;
    const int components = label_components();
    const std::size_t open = pairs_.size() - current_pair;
    std::vector<std::vector<int>> claims(open);
    for (std::size_t j = 0; j < open; ++j) {
      const std::size_t pair = current_pair + j;
      const VertexId from = j == 0 ? head : pairs_[pair].source;
      const VertexId to = pairs_[pair].target;
      const bool direct = graph_.has_edge(from, to);
      auto a = adjacent_components(from);
      auto b = adjacent_components(to);
      std::vector<int> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      if (!direct && both.empty()) return false;
      claims[j] = std::move(both);
    }
    if (!options_.require_spanning) return true;
    if (static_cast<std::size_t>(components) > open) return false;
    if (!degrees_ok(head, current_pair)) return false;
    // Every component needs its own pair: bipartite matching from components.
    std::vector<int> owner_of_pair(open, -1);
    std::vector<std::vector<std::size_t>> claimants(static_cast<std::size_t>(components));
    for (std::size_t j = 0; j < open; ++j) {
      for (int c : claims[j]) claimants[c].push_back(j);
    }
    for (int c = 0; c < components; ++c) {
      std::vector<bool> seen(open, false);
      if (!augment(c, claimants, owner_of_pair, seen)) return false;
    }
    return true;
  }

  // Spanning mode: a free vertex ends up inside some path, so it needs two
  // usable neighbors; an unfinished terminal needs one.
  bool open_terminal(VertexId v, std::size_t current_pair) const {
    const int p = pair_of_[v];
    if (p < 0) return false;
    const auto pi = static_cast<std::size_t>(p);
    return pi > current_pair || (pi == current_pair && pairs_[pi].target == v);
  }

  bool degrees_ok(VertexId head, std::size_t current_pair) const {
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
      const bool free = state_[v] == kFree;
      if (!free && !(v != head && open_terminal(v, current_pair))) continue;
      int usable = 0;
      for (VertexId x : graph_.neighbors(v)) {
        if (state_[x] == kFree || x == head || open_terminal(x, current_pair)) ++usable;
      }
      if (usable < (free ? 2 : 1)) return false;
    }
    return true;
  }

  static bool augment(int c, const std::vector<std::vector<std::size_t>>& claimants,
                      std::vector<int>& owner, std::vector<bool>& seen) {
    for (std::size_t j : claimants[c]) {
      if (seen[j]) continue;
      seen[j] = true;
      if (owner[j] < 0 || augment(owner[j], claimants, owner, seen)) {
        owner[j] = c;
        return true;
      }
    }
    return false;
  }

  int label_components() {
    std::fill(component_.begin(), component_.end(), -1);
    int next = 0;
    queue_.clear();
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
      if (state_[v] != kFree || component_[v] >= 0) continue;
      component_[v] = next;
      queue_.assign(1, v);
      for (std::size_t q = 0; q < queue_.size(); ++q) {
        for (VertexId w : graph_.neighbors(queue_[q])) {
          if (state_[w] == kFree && component_[w] < 0) {
            component_[w] = next;
            queue_.push_back(w);
          }
        }
      }
      ++next;
    }
    return next;
  }

  std::vector<int> adjacent_components(VertexId v) const {
    std::vector<int> out;
    for (VertexId w : graph_.neighbors(v)) {
      if (component_[w] >= 0) out.push_back(component_[w]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  const Graph& graph_;
  const std::vector<TerminalPair>& pairs_;
  SolveMode mode_;
  const SolveOptions& options_;
  std::vector<std::uint8_t> state_;
  std::vector<int> component_;
  std::vector<bool> on_path_;  // vertices of the path being grown
  std::vector<int> pair_of_;   // pair index of a terminal, -1 otherwise
  std::vector<VertexId> queue_;
  std::vector<VertexId> current_;
  std::vector<Path> paths_;
  std::vector<Linkage> found_;
  std::size_t free_count_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  Clock::time_point start_;
};

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::solvable: return "solvable";
    case SolveStatus::unsolvable: return "unsolvable";
    case SolveStatus::aborted: return "aborted";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

SolveOutcome solve(const Instance& inst, SolveMode mode, const SolveOptions& options) {
  validate_terminals(inst);
  if (mode.cap == 0) throw std::invalid_argument("solution cap must be at least 1");
  if (mode.kind == SolveMode::Kind::decide) mode.cap = 1;
  return Search(inst, mode, options).run();
}

Verdict is_unique_solution(const Instance& inst, const SolveOptions& options) {
  const auto outcome = solve(inst, SolveMode::count_up_to(2), options);
  if (outcome.status == SolveStatus::aborted) return Verdict::indeterminate;
  return outcome.solutions.size() == 1 ? Verdict::yes : Verdict::no;
}

bool spans_all_vertices(const Graph& g, const Linkage& l) {
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
  for (const Path& p : l.paths) {
    for (VertexId v : p.vertices) {
      if (g.valid(v)) covered[v] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

IrrelevantReport irrelevant_vertices(const Instance& inst, const SolveOptions& options,
                                     unsigned threads) {
  validate_terminals(inst);
  std::vector<bool> terminal(static_cast<std::size_t>(inst.graph.vertex_count()), false);
  for (const auto& p : inst.pairs) terminal[p.source] = terminal[p.target] = true;
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    if (!terminal[v]) candidates.push_back(v);
  }

  IrrelevantReport report;
  const auto base = solve(inst, SolveMode::decide(), options).status;
  if (base == SolveStatus::aborted) {
    report.indeterminate.insert(candidates.begin(), candidates.end());
    return report;
  }

  std::vector<SolveStatus> status(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      SolveOptions local = options;
      local.forbidden.push_back(candidates[i]);
      status[i] = solve(inst, SolveMode::decide(), local).status;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    worker();
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (status[i] == SolveStatus::aborted) {
      report.indeterminate.insert(candidates[i]);
    } else if (status[i] == base) {
      report.irrelevant.insert(candidates[i]);
    }
  }
  return report;
}

std::set<VertexId> pattern_of(const Linkage& l) {
  std::set<VertexId> out;
  for (const Path& p : l.paths) {
    if (p.size() < 2) {
      throw std::invalid_argument("linkage component with fewer than two vertices has no degree-1 "
                                  "vertices");
    }
    out.insert(p.front());
    out.insert(p.back());
  }
  return out;
}

namespace {

void pairings(std::vector<VertexId>& rest, std::vector<TerminalPair>& acc,
              const std::function<bool(const std::vector<TerminalPair>&)>& visit, bool& stop) {
  if (stop) return;
  if (rest.empty()) {
    stop = !visit(acc);
    return;
  }
  const VertexId first = rest.front();
  for (std::size_t i = 1; i < rest.size() && !stop; ++i) {
    const VertexId partner = rest[i];
    std::vector<VertexId> remaining;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (j != i) remaining.push_back(rest[j]);
    }
    acc.push_back({first, partner});
    pairings(remaining, acc, visit, stop);
    acc.pop_back();
  }
}

}  // namespace

Verdict is_vital_linkage(const Graph& g, const Linkage& l, const SolveOptions& options) {
  Instance self;
  self.graph = g;
  for (const Path& p : l.paths) {
    if (p.empty()) throw std::invalid_argument("empty linkage component");
    self.pairs.push_back({p.front(), p.back()});
  }
  if (auto defect = linkage_defect(self, l); !defect.empty()) {
    throw std::invalid_argument("not a linkage: " + defect);
  }
  if (!spans_all_vertices(g, l)) throw std::invalid_argument("linkage does not span the graph");
  auto pattern_set = pattern_of(l);
  std::vector<VertexId> pattern(pattern_set.begin(), pattern_set.end());

  std::size_t count = 0;
  bool aborted = false;
  SolveOptions spanning = options;
  spanning.require_spanning = true;
  std::vector<TerminalPair> acc;
  bool stop = false;
  pairings(pattern, acc, [&](const std::vector<TerminalPair>& pairs) {
    Instance candidate;
    candidate.graph = g;
    candidate.pairs = pairs;
    const auto outcome = solve(candidate, SolveMode::count_up_to(2 - count), spanning);
    count += outcome.solutions.size();
    if (outcome.status == SolveStatus::aborted) aborted = true;
    return count < 2 && !aborted;
  }, stop);

  if (count >= 2) return Verdict::no;
  if (aborted) return Verdict::indeterminate;
  return count == 1 ? Verdict::yes : Verdict::no;
}

}  // namespace dpp
