#include "dpp/width.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dpp {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int v) { return Mask{1} << v; }
int lowest(Mask m) { return std::countr_zero(m); }
int count(Mask m) { return std::popcount(m); }

struct BitGraph {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> adj;
};

BitGraph to_bits(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("width of the empty graph is undefined");
  if (g.vertex_count() > 64) throw std::invalid_argument("exact width supports at most 64 vertices");
  BitGraph b;
  b.n = g.vertex_count();
  b.all = b.n == 64 ? ~Mask{0} : bit(b.n) - 1;
  b.adj.assign(static_cast<std::size_t>(b.n), 0);
  for (const Edge& e : g.edges()) {
    b.adj[e.first] |= bit(e.second);
    b.adj[e.second] |= bit(e.first);
  }
  return b;
}

// Neighbors of v after eliminating `gone`: vertices outside `gone` reachable
// from v through eliminated vertices.
Mask eliminated_neighbors(const BitGraph& g, Mask gone, int v) {
  Mask seen = bit(v);
  Mask frontier = bit(v);
  Mask reach = 0;
  while (frontier) {
    const int u = lowest(frontier);
    frontier &= frontier - 1;
    const Mask fresh = g.adj[u] & ~seen;
    reach |= fresh & ~gone;
    seen |= fresh & gone;
    frontier |= fresh & gone;
  }
  return reach & ~gone & ~bit(v);
}

std::vector<Mask> elimination_graph(const BitGraph& g, Mask gone) {
  std::vector<Mask> h(static_cast<std::size_t>(g.n), 0);
  for (Mask r = g.all & ~gone; r; r &= r - 1) {
    const int v = lowest(r);
    h[v] = eliminated_neighbors(g, gone, v);
  }
  return h;
}

int degeneracy(std::vector<Mask> h, Mask alive) {
  int best = 0;
  while (alive) {
    int v = -1;
    int d = INT_MAX;
    for (Mask r = alive; r; r &= r - 1) {
      const int u = lowest(r);
      const int du = count(h[u] & alive);
      if (du < d) {
        d = du;
        v = u;
      }
    }
    best = std::max(best, d);
    alive &= ~bit(v);
  }
  return best;
}

// Contract a minimum-degree vertex into its smallest-degree neighbor until
// one vertex is left; the largest minimum degree seen bounds treewidth.
int minor_min_width(std::vector<Mask> h, Mask alive) {
  int best = 0;
  while (count(alive) > 1) {
    int v = -1;
    int d = INT_MAX;
    for (Mask r = alive; r; r &= r - 1) {
      const int u = lowest(r);
      if (count(h[u]) < d) {
        d = count(h[u]);
        v = u;
      }
    }
    best = std::max(best, d);
    alive &= ~bit(v);
    if (d == 0) continue;
    int into = -1;
    int du = INT_MAX;
    for (Mask r = h[v]; r; r &= r - 1) {
      const int u = lowest(r);
      if (count(h[u]) < du) {
        du = count(h[u]);
        into = u;
      }
    }
    const Mask moved = h[v] & ~bit(into);
    for (Mask r = h[v]; r; r &= r - 1) h[lowest(r)] &= ~bit(v);
    h[into] |= moved;
    for (Mask r = moved; r; r &= r - 1) h[lowest(r)] |= bit(into);
    h[v] = 0;
  }
  return best;
}

int max_clique(const BitGraph& g, Mask candidates, int size, int best) {
  if (!candidates) return std::max(best, size);
  if (size + count(candidates) <= best) return best;
  while (candidates) {
    if (size + count(candidates) <= best) break;
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    best = max_clique(g, candidates & g.adj[v], size + 1, best);
  }
  return best;
}

bool is_clique(const std::vector<Mask>& h, Mask set) {
  for (Mask r = set; r; r &= r - 1) {
    const int u = lowest(r);
    if ((set & ~bit(u) & ~h[u]) != 0) return false;
  }
  return true;
}

bool almost_clique(const std::vector<Mask>& h, Mask set) {
  if (is_clique(h, set)) return true;
  for (Mask r = set; r; r &= r - 1) {
    if (is_clique(h, set & ~bit(lowest(r)))) return true;
  }
  return false;
}

class Meter {
 public:
  explicit Meter(const WidthBudget& budget) : budget_(budget), start_(Clock::now()) {}
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) exhausted_ = true;
    if ((nodes_ & 1023) == 0 && Clock::now() - start_ > budget_.max_time) exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }

 private:
  const WidthBudget& budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

class TreewidthSearch {
 public:
  TreewidthSearch(const BitGraph& g, const WidthBudget& budget) : g_(g), meter_(budget) {}

  WidthResult run() {
    greedy_min_fill();
    const auto h = elimination_graph(g_, 0);
    floor_ = std::max({minor_min_width(h, g_.all), degeneracy(h, g_.all),
                       max_clique(g_, g_.all, 0, 0) - 1});
    if (upper_ > floor_) dfs(0, 0);
    return WidthResult{upper_, best_order_, !meter_.exhausted()};
  }

 private:
  void greedy_min_fill() {
    Mask gone = 0;
    int width = 0;
    std::vector<VertexId> order;
    while (gone != g_.all) {
      const auto h = elimination_graph(g_, gone);
      int pick = -1;
      long best_fill = LONG_MAX;
      for (Mask r = g_.all & ~gone; r; r &= r - 1) {
        const int v = lowest(r);
        long fill = 0;
        for (Mask s = h[v]; s; s &= s - 1) fill += count(h[v] & ~h[lowest(s)] & ~bit(lowest(s)));
        if (fill < best_fill) {
          best_fill = fill;
          pick = v;
        }
      }
      width = std::max(width, count(h[pick]));
      order.push_back(pick);
      gone |= bit(pick);
    }
    upper_ = width;
    best_order_ = std::move(order);
  }

  void finish(Mask gone, int width) {
    upper_ = width;
    best_order_ = prefix_;
    for (Mask r = g_.all & ~gone; r; r &= r - 1) best_order_.push_back(lowest(r));
  }

  void dfs(Mask gone, int width) {
    if (upper_ <= floor_ || width >= upper_ || !meter_.tick()) return;
    const int remaining = count(g_.all & ~gone);
    if (remaining - 1 <= width) {
      finish(gone, width);
      return;
    }
    auto [it, inserted] = memo_.try_emplace(gone, width);
    if (!inserted) {
      if (it->second <= width) return;
      it->second = width;
    }
    const Mask alive = g_.all & ~gone;
    const auto h = elimination_graph(g_, gone);
    const int bound = std::max(minor_min_width(h, alive), degeneracy(h, alive));
    if (std::max(width, bound) >= upper_) return;

    std::vector<int> branch;
    for (Mask r = alive; r; r &= r - 1) {
      const int v = lowest(r);
      if (is_clique(h, h[v]) || (count(h[v]) <= bound && almost_clique(h, h[v]))) {
        branch.assign(1, v);
        break;
      }
      branch.push_back(v);
    }
    std::stable_sort(branch.begin(), branch.end(),
                     [&](int a, int b) { return count(h[a]) < count(h[b]); });
    for (int v : branch) {
      prefix_.push_back(v);
      dfs(gone | bit(v), std::max(width, count(h[v])));
      prefix_.pop_back();
      if (upper_ <= floor_ || meter_.exhausted()) return;
    }
  }

  const BitGraph& g_;
  Meter meter_;
  int upper_ = INT_MAX;
  int floor_ = 0;
  std::vector<VertexId> best_order_;
  std::vector<VertexId> prefix_;
  std::unordered_map<Mask, int> memo_;
};

class PathwidthSearch {
 public:
  PathwidthSearch(const BitGraph& g, const WidthBudget& budget) : g_(g), meter_(budget) {}

  WidthResult run() {
    auto [upper, order] = greedy();
    const auto h = elimination_graph(g_, 0);
    const int floor = std::max(minor_min_width(h, g_.all), degeneracy(h, g_.all));
    for (int w = floor; w < upper; ++w) {
      failed_.clear();
      prefix_.clear();
      if (feasible(0, w)) return WidthResult{w, prefix_, true};
      if (meter_.exhausted()) return WidthResult{upper, order, false};
    }
    return WidthResult{upper, order, true};
  }

 private:
  int cost(Mask placed) const {
    int c = 0;
    for (Mask r = placed; r; r &= r - 1) {
      if (g_.adj[lowest(r)] & ~placed) ++c;
    }
    return c;
  }

  std::pair<int, std::vector<VertexId>> greedy() const {
    Mask placed = 0;
    int width = 0;
    std::vector<VertexId> order;
    while (placed != g_.all) {
      int pick = -1;
      int best = INT_MAX;
      for (Mask r = g_.all & ~placed; r; r &= r - 1) {
        const int v = lowest(r);
        const int c = cost(placed | bit(v));
        if (c < best) {
          best = c;
          pick = v;
        }
      }
      width = std::max(width, best);
      placed |= bit(pick);
      order.push_back(pick);
    }
    return {width, order};
  }

  bool feasible(Mask placed, int w) {
    if (placed == g_.all) return true;
    if (failed_.contains(placed) || !meter_.tick()) return false;
    // A vertex whose neighbors are all placed can go next without loss.
    for (Mask r = g_.all & ~placed; r; r &= r - 1) {
      const int v = lowest(r);
      if ((g_.adj[v] & ~placed) == 0) {
        prefix_.push_back(v);
        if (feasible(placed | bit(v), w)) return true;
        prefix_.pop_back();
        failed_.insert(placed);
        return false;
      }
    }
    std::vector<std::pair<int, int>> moves;
    for (Mask r = g_.all & ~placed; r; r &= r - 1) {
      const int v = lowest(r);
      const int c = cost(placed | bit(v));
      if (c <= w) moves.emplace_back(c, v);
    }
    std::sort(moves.begin(), moves.end());
    for (auto [c, v] : moves) {
      prefix_.push_back(v);
      if (feasible(placed | bit(v), w)) return true;
      prefix_.pop_back();
      if (meter_.exhausted()) return false;
    }
    failed_.insert(placed);
    return false;
  }

  const BitGraph& g_;
  Meter meter_;
  std::vector<VertexId> prefix_;
  std::unordered_set<Mask> failed_;
};

void check_order(const Graph& g, std::span<const VertexId> order) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  if (order.size() != seen.size()) throw std::invalid_argument("order must list every vertex once");
  for (VertexId v : order) {
    if (!g.valid(v) || seen[v]) throw std::invalid_argument("order must list every vertex once");
    seen[v] = true;
  }
}

}  // namespace

int elimination_width(const Graph& g, std::span<const VertexId> order) {
  check_order(g, order);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(g.vertex_count()),
                                     std::vector<bool>(static_cast<std::size_t>(g.vertex_count())));
  for (const Edge& e : g.edges()) adj[e.first][e.second] = adj[e.second][e.first] = true;
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()), false);
  int width = 0;
  for (VertexId v : order) {
    std::vector<VertexId> nb;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (!gone[u] && adj[v][u]) nb.push_back(u);
    }
    width = std::max(width, static_cast<int>(nb.size()));
    for (VertexId a : nb) {
      for (VertexId b : nb) {
        if (a != b) adj[a][b] = true;
      }
    }
    gone[v] = true;
  }
  return width;
}

int vertex_separation(const Graph& g, std::span<const VertexId> order) {
  check_order(g, order);
  std::vector<std::size_t> position(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  int width = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int boundary = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      for (VertexId w : g.neighbors(order[j])) {
        if (position[w] > i) {
          ++boundary;
          break;
        }
      }
    }
    width = std::max(width, boundary);
  }
  return width;
}

WidthResult treewidth_exact(const Graph& g, const WidthBudget& budget) {
  const BitGraph bits = to_bits(g);
  return TreewidthSearch(bits, budget).run();
}

WidthResult pathwidth_exact(const Graph& g, const WidthBudget& budget) {
  const BitGraph bits = to_bits(g);
  return PathwidthSearch(bits, budget).run();
}

WidthLowerBoundReport verify_width_lower_bound(const Instance& inst, const WidthBudget& budget) {
  if (!inst.meta) throw std::invalid_argument("instance carries no generator parameters");
  WidthLowerBoundReport report;
  report.k = inst.meta->k;
  report.required = (1 << report.k) + 1;
  report.components = static_cast<int>(inst.pairs.size());
  report.treewidth = treewidth_exact(inst.graph, budget);
  report.pathwidth = pathwidth_exact(inst.graph, budget);
  auto judge = [&](const WidthResult& r) {
    if (!r.exact) return Verdict::indeterminate;
    return r.value >= report.required ? Verdict::yes : Verdict::no;
  };
  report.treewidth_ok = judge(report.treewidth);
  report.pathwidth_ok = judge(report.pathwidth);
  return report;
}

}  // namespace dpp
