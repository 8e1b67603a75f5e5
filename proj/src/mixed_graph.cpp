#include "mvrcg/mixed_graph.hpp"

#include <algorithm>
#include <tuple>

#include "mvrcg/errors.hpp"

namespace mvrcg {

bool operator<(const Edge& a, const Edge& b) {
    return std::tuple(a.tail, a.head, static_cast<int>(a.kind)) < std::tuple(b.tail, b.head, static_cast<int>(b.kind));
}

MixedGraph::MixedGraph(std::size_t n) {
    if (n > kMaxVertices) throw GraphFormatError("graph has more than 64 vertices");
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    parents_.assign(n, {});
    children_.assign(n, {});
    spouses_.assign(n, {});
    adjacent_.assign(n, {});
}

MixedGraph::MixedGraph(std::vector<std::string> labels) : MixedGraph(labels.size()) {
    labels_ = std::move(labels);
}

VertexId MixedGraph::add_vertex(std::string label) {
    if (size() >= kMaxVertices) throw GraphFormatError("graph has more than 64 vertices");
    const auto id = static_cast<VertexId>(size());
    labels_.push_back(label.empty() ? std::to_string(id) : std::move(label));
    parents_.emplace_back();
    children_.emplace_back();
    spouses_.emplace_back();
    adjacent_.emplace_back();
    return id;
}

void MixedGraph::check_pair(VertexId u, VertexId v) const {
    if (u >= size() || v >= size()) throw GraphFormatError("edge endpoint out of range");
    if (u == v) throw GraphFormatError("self-loop on vertex " + labels_[u]);
    if (adjacent_[u].contains(v)) {
        throw GraphFormatError("more than one edge between " + labels_[u] + " and " + labels_[v]);
    }
}

void MixedGraph::add_directed(VertexId from, VertexId to) {
    check_pair(from, to);
    children_[from].insert(to);
    parents_[to].insert(from);
    adjacent_[from].insert(to);
    adjacent_[to].insert(from);
    ++edge_count_;
}

void MixedGraph::add_bidirected(VertexId u, VertexId v) {
    check_pair(u, v);
    spouses_[u].insert(v);
    spouses_[v].insert(u);
    adjacent_[u].insert(v);
    adjacent_[v].insert(u);
    ++edge_count_;
}

void MixedGraph::add_edge(const Edge& e) {
    if (e.kind == EdgeKind::Directed) {
        add_directed(e.tail, e.head);
    } else {
        add_bidirected(e.tail, e.head);
    }
}

bool MixedGraph::remove_edge(VertexId u, VertexId v) {
    if (u >= size() || v >= size() || !adjacent_[u].contains(v)) return false;
    children_[u].erase(v);
    children_[v].erase(u);
    parents_[u].erase(v);
    parents_[v].erase(u);
    spouses_[u].erase(v);
    spouses_[v].erase(u);
    adjacent_[u].erase(v);
    adjacent_[v].erase(u);
    --edge_count_;
    return true;
}

VertexSet MixedGraph::parents_of(VertexSet s) const {
    VertexSet out;
    for (VertexId v : s) out |= parents_[v];
    return out - s;
}

VertexSet MixedGraph::children_of(VertexSet s) const {
    VertexSet out;
    for (VertexId v : s) out |= children_[v];
    return out - s;
}

std::size_t MixedGraph::bidirected_count() const {
    std::size_t twice = 0;
    for (const auto& s : spouses_) twice += s.size();
    return twice / 2;
}

std::vector<Edge> MixedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < size(); ++u) {
        for (VertexId v : children_[u]) out.push_back({EdgeKind::Directed, u, v});
        for (VertexId v : spouses_[u]) {
            if (u < v) out.push_back({EdgeKind::Bidirected, u, v});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VertexId> MixedGraph::find(std::string_view label) const {
    for (VertexId v = 0; v < size(); ++v) {
        if (labels_[v] == label) return v;
    }
    return std::nullopt;
}

std::string MixedGraph::format_set(VertexSet s, std::string_view sep) const {
    std::string out;
    for (VertexId v : s) {
        if (!out.empty()) out += sep;
        out += v < size() ? labels_[v] : std::to_string(v);
    }
    return out;
}

bool MixedGraph::same_structure(const MixedGraph& other) const {
    return size() == other.size() && children_ == other.children_ && spouses_ == other.spouses_;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
    return same_structure(other) && labels_ == other.labels_;
}

}  // namespace mvrcg
