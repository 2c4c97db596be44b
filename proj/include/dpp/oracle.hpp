#pragma once

#include "dpp/solver.hpp"

namespace dpp {

/// Reference enumeration for validating `solve`: lists every simple path of
/// each pair independently (avoiding the other terminals), then combines
/// them under a pairwise disjointness filter. No pruning. Same canonical
/// order as `solve`. Limited to graphs with at most 64 vertices.
SolveOutcome brute_force_oracle(const Instance& inst, bool require_spanning = false);

}  // namespace dpp
