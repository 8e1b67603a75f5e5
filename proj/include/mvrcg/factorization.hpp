#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvrcg/graph_core.hpp"
#include "mvrcg/mixed_graph.hpp"

namespace mvrcg {

struct HeadTail {
    VertexSet head;
    VertexSet tail;

    bool operator==(const HeadTail&) const = default;
};

/// Ordered factors p(X_H | X_tail) whose heads partition `scope`.
struct Factorization {
    VertexSet scope;
    std::vector<HeadTail> factors;

    bool operator==(const Factorization&) const = default;
};

/// Members of H with no proper descendant in H.
VertexSet barren(const MixedGraph& g, VertexSet h);

/// (dis_{an(H)}(H) \ H) ∪ pa(dis_{an(H)}(H)).
VertexSet tail_of(const MixedGraph& g, VertexSet h);

/// H nonempty, barren, and inside one district of G_{an(H)}.
bool is_head(const MixedGraph& g, VertexSet h);

/// Every head of g with its tail, ordered by lex order of heads. Throws CapExceeded if |V| > cap.
std::vector<HeadTail> heads(const MixedGraph& g, std::size_t cap = 16);

/// [A]_G: heads are barren(D) for each district D of G_W, starting from W = A and recursing on
/// W minus the heads just emitted. Throws NotAncestrallyClosed, or HeadTestFailed if an
/// emitted block is not a head.
Factorization head_partition(const MixedGraph& g, VertexSet a);

/// One factor per chain component, conditioned on pa_G(T); responses first.
Factorization factorize_mvr(const MixedGraph& g, const ChainDecomposition& dec);

/// One factor per chain component, conditioned on the union of its parent components.
Factorization factorize_component_dag(const MixedGraph& g, const ChainDecomposition& dec);

/// "p(a,b | c)" or "p(a,b)".
std::string format_factor(const MixedGraph& g, const HeadTail& f);
/// Factors joined by " * ".
std::string format_factorization(const MixedGraph& g, const Factorization& f);
nlohmann::json factorization_to_json(const MixedGraph& g, const Factorization& f);

}  // namespace mvrcg
