#include "mvrcg/intervention.hpp"

#include <stdexcept>

namespace mvrcg {

MixedGraph intervene(const MixedGraph& g, VertexSet x) {
    if (!x.is_subset_of(g.vertices())) throw std::out_of_range("intervention set outside the graph");
    MixedGraph out(g.labels());
    for (const Edge& e : g.edges()) {
        if (x.contains(e.head)) continue;
        if (e.kind == EdgeKind::Bidirected && x.contains(e.tail)) continue;
        out.add_edge(e);
    }
    return out;
}

}  // namespace mvrcg
