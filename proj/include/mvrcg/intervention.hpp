#pragma once

#include "mvrcg/mixed_graph.hpp"

namespace mvrcg {

/// Removes every directed edge pointing into x and every bidirected edge with an endpoint in x.
/// Vertices and labels are kept. Throws std::out_of_range when x is not within V(g).
MixedGraph intervene(const MixedGraph& g, VertexSet x);

}  // namespace mvrcg
