#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mvrcg/mixed_graph.hpp"
#include "mvrcg/vertex_set.hpp"

namespace mvrcg {

/// an(X), reflexive.
VertexSet ancestors(const MixedGraph& g, VertexSet x);
/// ant(X), reflexive. Anterior paths may use only undirected and forward directed edges; since
/// MixedGraph carries no undirected edges this coincides with ancestors().
VertexSet anteriors(const MixedGraph& g, VertexSet x);
/// de(X), reflexive.
VertexSet descendants(const MixedGraph& g, VertexSet x);

/// Bidirected-connected component of v inside the induced subgraph on `within` (v must be in it).
VertexSet district(const MixedGraph& g, VertexId v, VertexSet within);
inline VertexSet district(const MixedGraph& g, VertexId v) { return district(g, v, g.vertices()); }
/// dis_A(B): union of the districts of members of B in G_A.
VertexSet district_of_set(const MixedGraph& g, VertexSet b, VertexSet within);
/// All districts of G_A, ordered by smallest member.
std::vector<VertexSet> districts(const MixedGraph& g, VertexSet within);
inline std::vector<VertexSet> districts(const MixedGraph& g) { return districts(g, g.vertices()); }

/// True when `s` is connected in the bidirected subgraph induced on `s`.
bool bidirected_connected(const MixedGraph& g, VertexSet s);

bool is_ancestrally_closed(const MixedGraph& g, VertexSet a);
bool has_directed_cycle(const MixedGraph& g);
/// Graph with directed edges only and no directed cycle.
bool is_dag(const MixedGraph& g);

struct InducedSubgraph {
    MixedGraph graph;
    /// original[i] is the id in the source graph of vertex i of `graph`.
    std::vector<VertexId> original;

    VertexSet lift(VertexSet local) const;
};

/// G_A: vertices of A re-indexed densely in increasing id order, with their labels.
InducedSubgraph induced_subgraph(const MixedGraph& g, VertexSet a);

/// Chain components of an MVR chain graph together with the two orders used downstream.
///
/// `components` is sorted by smallest member. `component_order` lists component indices with
/// responses first: if T precedes T' then T is not a parent component of T'. `vertex_order` is
/// a topological order with ancestors first. The two orders run in opposite directions and are
/// never converted into each other.
struct ChainDecomposition {
    std::vector<VertexSet> components;
    std::vector<std::size_t> component_of;
    /// component_parents[t] are the indices T' with T' -> T in the component DAG.
    std::vector<std::vector<std::size_t>> component_parents;
    std::vector<std::vector<std::size_t>> component_children;
    std::vector<std::size_t> component_order;
    std::vector<std::size_t> component_rank;
    std::vector<VertexId> vertex_order;
    std::vector<std::size_t> vertex_rank;

    std::size_t size() const { return components.size(); }
    VertexSet component(std::size_t t) const { return components[t]; }
    VertexSet component_containing(VertexId v) const { return components[component_of[v]]; }

    /// pre(T): union of the components strictly after T in the component order.
    VertexSet pre(std::size_t t) const;
    /// pst(v) = pre of v's component.
    VertexSet past(VertexId v) const { return pre(component_of[v]); }
    /// pa_D(T): union of the parent components of T.
    VertexSet parent_components(std::size_t t) const;
    /// nd_D(T): union of the components not reachable from T in the component DAG (T excluded).
    VertexSet nondescendant_components(std::size_t t) const;
};

/// Returns the chain decomposition or throws PartiallyDirectedCycle with a witness closed walk.
ChainDecomposition validate_chain_graph(const MixedGraph& g);

/// Fast yes/no form of validate_chain_graph (no witness, no orders).
bool is_chain_graph(const MixedGraph& g);

/// Convenience: validate_chain_graph without the exception.
std::optional<ChainDecomposition> try_chain_decomposition(const MixedGraph& g);

inline VertexSet pre_of_component(const ChainDecomposition& dec, std::size_t t) { return dec.pre(t); }

struct Relatives {
    VertexSet pa;
    VertexSet nb;
    VertexSet bd;
    VertexSet de;
    VertexSet nd;
    /// Empty unless a decomposition was supplied.
    VertexSet pst;
    VertexSet dis;
};

Relatives relatives(const MixedGraph& g, VertexId v, const ChainDecomposition* dec = nullptr);

}  // namespace mvrcg
