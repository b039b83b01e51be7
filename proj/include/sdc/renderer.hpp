#pragma once

#include <string>

#include "sdc/diagram.hpp"

namespace sdc {

/// Graphviz digraph: circular nodes, the start state filled green, one
/// labelled edge per transition, all in diagram order. Layout hints are not
/// exported.
std::string to_dot(const StateDiagram& d);

}  // namespace sdc
