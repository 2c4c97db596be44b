#pragma once

#include <optional>
#include <string>

#include "dpp/instance.hpp"

namespace dpp {

/// Static drawing: grid on the lattice, exterior arcs bulging outward from
/// their side, terminals labelled s_i / t_i, one stroke colour per solution
/// path. Output bytes depend only on the inputs. Throws std::invalid_argument
/// when the instance has no layout.
std::string render_svg(const Instance& inst, const std::optional<Linkage>& solution = {});

/// Graphviz export with role attributes on vertices and edges and pinned
/// lattice positions.
std::string render_dot(const Instance& inst, const std::optional<Linkage>& solution = {});

}  // namespace dpp
