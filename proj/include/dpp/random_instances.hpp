#pragma once

#include <cstdint>

#include "dpp/instance.hpp"

namespace dpp {

struct RandomInstanceSpec {
  VertexId vertices = 8;
  int pairs = 2;
  double edge_probability = 0.3;
};

/// G(n, p) graph with distinct random terminals; same seed, same instance.
Instance random_instance(std::uint64_t seed, const RandomInstanceSpec& spec);

}  // namespace dpp
