#include "dpp/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dpp {

Instance random_instance(std::uint64_t seed, const RandomInstanceSpec& spec) {
  if (spec.vertices < 0 || spec.pairs < 0 || 2 * spec.pairs > spec.vertices) {
    throw std::invalid_argument("not enough vertices for the requested terminal pairs");
  }
  if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(spec.edge_probability);
  Instance inst;
  inst.graph = Graph(spec.vertices);
  for (VertexId u = 0; u < spec.vertices; ++u) {
    for (VertexId v = u + 1; v < spec.vertices; ++v) {
      if (coin(rng)) inst.graph.add_edge(u, v);
    }
  }
  std::vector<VertexId> order(static_cast<std::size_t>(spec.vertices));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < spec.pairs; ++i) {
    inst.pairs.push_back({order[2 * i], order[2 * i + 1]});
  }
  return inst;
}

}  // namespace dpp
