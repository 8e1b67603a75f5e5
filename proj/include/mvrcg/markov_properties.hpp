#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "mvrcg/graph_core.hpp"
#include "mvrcg/independence.hpp"
#include "mvrcg/mixed_graph.hpp"

namespace mvrcg {

enum class PropertyKind { P1, P2, P3, P4, MR, TypeIV, OrderedLocal, AltLocal, Global };

std::string property_name(PropertyKind k);
/// Accepts p1..p4, mr, iv, ordered, local, global.
PropertyKind parse_property(const std::string& name);

struct PropertyCaps {
    /// Largest chain component whose subsets are enumerated (MR, type IV).
    std::size_t component = 12;
    /// Largest pre(x) whose subsets are enumerated (ordered local).
    std::size_t prefix = 12;
    /// Largest graph for the global model.
    std::size_t global = 7;
};

/// Pairwise properties for every uncoupled pair {i, j}:
///   P1 conditions on pst(i,j), P2 on ant(i,j), P3 on pa(i,j), P4 on pa of the earlier vertex.
/// The earlier vertex for P4 is the one whose component comes first in the component order
/// (ties broken by id). With `p4_both`, same-component pairs also emit the pa(j) variant.
IndependenceModel pairwise_triples(const MixedGraph& g, const ChainDecomposition& dec, PropertyKind variant,
                                   bool p4_both = false);

/// MR1 for every connected A ⊆ T; MR2 as <A_i, A \ A_i | pre(T)> per district A_i of a disconnected A.
IndependenceModel mr_triples(const MixedGraph& g, const ChainDecomposition& dec, const PropertyCaps& caps = {});

/// IV0 per component, IV1 for every nonempty A ⊆ T, IV2 for every connected A ⊆ T.
IndependenceModel type_iv_triples(const MixedGraph& g, const ChainDecomposition& dec, const PropertyCaps& caps = {});

/// mb(x, A) = pa(dis_{G_A}(x)) ∪ (dis_{G_A}(x) \ {x}).
/// Throws NotAncestrallyClosed, HasChildInA, or std::invalid_argument if x ∉ A.
VertexSet markov_blanket(const MixedGraph& g, VertexId x, VertexSet a);

/// Throws InconsistentOrder unless `order` is a permutation with x ≺ y ⇒ y ∉ an(x).
void check_consistent_order(const MixedGraph& g, std::span<const VertexId> order);

/// For each x and ancestrally closed A with x ∈ A ⊆ pre(x): {x} ⫫ A \ (mb(x,A) ∪ {x}) | mb(x,A).
IndependenceModel ordered_local_triples(const MixedGraph& g, std::span<const VertexId> order,
                                        const PropertyCaps& caps = {});

/// v ⫫ nd(v) \ bd(v) | pa(v) for each v with a nonempty middle set.
IndependenceModel alt_local_triples(const MixedGraph& g, const ChainDecomposition& dec);

/// Dispatches on kind; OrderedLocal uses dec.vertex_order.
IndependenceModel property_triples(const MixedGraph& g, const ChainDecomposition& dec, PropertyKind kind,
                                   const PropertyCaps& caps = {}, bool p4_both = false);

}  // namespace mvrcg
