#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mvrcg/independence.hpp"
#include "mvrcg/mixed_graph.hpp"
#include "mvrcg/vertex_set.hpp"

namespace mvrcg {

/// Simple undirected graph as one adjacency set per vertex.
struct UndirectedGraph {
    std::vector<VertexSet> adj;

    std::size_t size() const { return adj.size(); }
    bool adjacent(VertexId u, VertexId v) const { return adj[u].contains(v); }
    std::size_t edge_count() const;
    /// Vertices reachable from `from` without entering `blocked`.
    VertexSet reachable(VertexSet from, VertexSet blocked) const;
    bool operator==(const UndirectedGraph&) const = default;
};

/// (G)^a: u - v iff u and v are joined by a collider path in g.
UndirectedGraph augmented_graph(const MixedGraph& g);

/// Separation of X and Y by Z in the augmented graph of G restricted to an(X ∪ Y ∪ Z).
bool m_star_separated(const MixedGraph& g, VertexSet x, VertexSet y, VertexSet z);

/// m-separation by reachability over (vertex, arrived-with-arrowhead) states.
bool m_separated(const MixedGraph& g, VertexSet x, VertexSet y, VertexSet z);

/// An m-connecting walk from X to Y given Z, or nullopt if separated.
std::optional<std::vector<VertexId>> m_connecting_walk(const MixedGraph& g, VertexSet x, VertexSet y, VertexSet z);

/// Classical d-separation via the moral graph of the ancestral set; throws NotADag.
bool d_separated(const MixedGraph& dag, VertexSet x, VertexSet y, VertexSet z);

/// ℑ_m(G): every <X,Y|Z> with X, Y nonempty and X, Y, Z disjoint that is m-separated.
/// Throws CapExceeded when |V| > cap.
IndependenceModel global_model(const MixedGraph& g, std::size_t cap = 7);

/// Same enumeration using m_star_separated.
IndependenceModel global_model_mstar(const MixedGraph& g, std::size_t cap = 7);

/// Calls fn(a, b, c) once per unordered triple (each {A,B} pair visited once, A lex-smaller).
template <typename Fn>
void for_each_disjoint_triple(VertexSet ground, Fn&& fn) {
    for_each_nonempty_subset(ground, [&](VertexSet a) {
        for_each_nonempty_subset(ground - a, [&](VertexSet b) {
            if (!lex_less(a, b)) return;
            for_each_subset(ground - a - b, [&](VertexSet c) { fn(a, b, c); });
        });
    });
}

}  // namespace mvrcg
