#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvrcg/vertex_set.hpp"

namespace mvrcg {

enum class EdgeKind { Directed, Bidirected };

/// A directed edge tail -> head, or a bidirected edge stored with tail < head.
struct Edge {
    EdgeKind kind = EdgeKind::Directed;
    VertexId tail = 0;
    VertexId head = 0;

    bool operator==(const Edge&) const = default;
};

bool operator<(const Edge& a, const Edge& b);

/// Graph with directed and bidirected edges, at most one edge per vertex pair and no self-loops.
///
/// Vertex ids are dense in [0, size()). Adjacency is kept as one VertexSet per vertex and edge
/// kind, so neighbourhood queries are O(1).
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(std::size_t n);
    explicit MixedGraph(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    VertexSet vertices() const { return VertexSet::full(size()); }

    VertexId add_vertex(std::string label = {});

    /// Throws GraphFormatError on self-loops, out-of-range ids or a second edge on the same pair.
    void add_directed(VertexId from, VertexId to);
    void add_bidirected(VertexId u, VertexId v);
    void add_edge(const Edge& e);
    /// Removes whatever edge joins u and v; returns false if none existed.
    bool remove_edge(VertexId u, VertexId v);

    bool adjacent(VertexId u, VertexId v) const { return adjacent_[u].contains(v); }
    bool has_directed(VertexId from, VertexId to) const { return children_[from].contains(to); }
    bool has_bidirected(VertexId u, VertexId v) const { return spouses_[u].contains(v); }

    VertexSet parents(VertexId v) const { return parents_[v]; }
    VertexSet children(VertexId v) const { return children_[v]; }
    VertexSet spouses(VertexId v) const { return spouses_[v]; }
    VertexSet adjacent_set(VertexId v) const { return adjacent_[v]; }

    /// pa_G(S): vertices outside S with a directed edge into S.
    VertexSet parents_of(VertexSet s) const;
    VertexSet children_of(VertexSet s) const;

    std::size_t edge_count() const { return edge_count_; }
    std::size_t bidirected_count() const;
    bool has_bidirected_edges() const { return bidirected_count() > 0; }

    /// All edges in canonical sorted order.
    std::vector<Edge> edges() const;

    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;

    std::string format_set(VertexSet s, std::string_view sep = ",") const;

    /// Same vertex count and the same edges; labels are ignored.
    bool same_structure(const MixedGraph& other) const;
    bool operator==(const MixedGraph& other) const;

private:
    void check_pair(VertexId u, VertexId v) const;

    std::vector<std::string> labels_;
    std::vector<VertexSet> parents_;
    std::vector<VertexSet> children_;
    std::vector<VertexSet> spouses_;
    std::vector<VertexSet> adjacent_;
    std::size_t edge_count_ = 0;
};

}  // namespace mvrcg
