#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mvrcg/independence.hpp"
#include "mvrcg/mixed_graph.hpp"

namespace mvrcg {

struct AncestralityResult {
    bool ancestral = true;
    /// An edge with an arrowhead at `witness_vertex` whose other endpoint it is anterior to.
    std::optional<Edge> witness;
    VertexId witness_vertex = 0;

    explicit operator bool() const { return ancestral; }
};

/// No edge carries an arrowhead at a vertex anterior to the edge's other endpoint.
AncestralityResult is_ancestral(const MixedGraph& g);

/// A chain <r, q1, ..., qp, s> whose interior vertices are all colliders lying in an({r, s}).
/// Throws VerticesAdjacent when r and s are adjacent.
std::optional<std::vector<VertexId>> find_primitive_inducing_chain(const MixedGraph& g, VertexId r, VertexId s);

enum class MaximalityMethod { InducingChain, SeparatorSearch };

/// Every nonadjacent pair is m-separated by some Z. Throws NotAncestral.
bool is_maximal(const MixedGraph& g, MaximalityMethod method = MaximalityMethod::InducingChain);

/// Latent-variable DAG: each u <-> v becomes u <- L -> v with L appended after the observed ids.
struct CanonicalDag {
    MixedGraph base;
    VertexSet observed;
    VertexSet latents;
};

CanonicalDag canonical_dag(const MixedGraph& g);

struct MarginalCheck {
    bool equal = true;
    std::optional<IndependenceTriple> counterexample;

    explicit operator bool() const { return equal; }
};

/// m-separation in g agrees with d-separation in canonical_dag(g) on every triple over V(g).
/// Throws CapExceeded when |V| > cap.
MarginalCheck marginal_model_equal(const MixedGraph& g, std::size_t cap = 6);

/// d-separation model of a DAG restricted to triples inside `observed`.
IndependenceModel restricted_d_separation_model(const MixedGraph& dag, VertexSet observed);

}  // namespace mvrcg
