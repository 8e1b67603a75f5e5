#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "mvrcg/mixed_graph.hpp"

namespace mvrcg {

/// Parses the line-based graph format:
///
///     # comment
///     vertex a
///     a -> b
///     b <-> c
///
/// Vertices are numbered in order of first appearance (declaration or edge). Undirected edges
/// (`--`) are rejected, as are duplicate edges on a pair. Errors carry the line number.
MixedGraph parse_graph(std::istream& in);
MixedGraph parse_graph_string(const std::string& text);
MixedGraph load_graph(const std::filesystem::path& path);

/// Inverse of parse_graph: all vertex declarations first, then edges in canonical order.
std::string format_graph(const MixedGraph& g);
void save_graph(const MixedGraph& g, const std::filesystem::path& path);

/// Graphviz rendering; bidirected edges use `dir=both`.
std::string to_dot(const MixedGraph& g, const std::string& name = "G");

/// Compact structural key, e.g. "n4:0>1,2<>3". Stable across runs.
std::string graph_key(const MixedGraph& g);

}  // namespace mvrcg
