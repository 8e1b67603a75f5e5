#include "mvrcg/structure_checks.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "mvrcg/errors.hpp"
#include "mvrcg/graph_core.hpp"
#include "mvrcg/separation.hpp"

namespace mvrcg {

AncestralityResult is_ancestral(const MixedGraph& g) {
    AncestralityResult result;
    auto anterior_to = [&g](VertexId a, VertexId b) { return anteriors(g, VertexSet::single(b)).contains(a); };
    for (const Edge& e : g.edges()) {
        // Arrowhead at e.head always; at e.tail only for bidirected edges.
        if (anterior_to(e.head, e.tail)) {
            result = {false, e, e.head};
            return result;
        }
        if (e.kind == EdgeKind::Bidirected && anterior_to(e.tail, e.head)) {
            result = {false, e, e.tail};
            return result;
        }
    }
    return result;
}

std::optional<std::vector<VertexId>> find_primitive_inducing_chain(const MixedGraph& g, VertexId r, VertexId s) {
    if (g.adjacent(r, s)) throw VerticesAdjacent("primitive inducing chain requested for adjacent vertices");
    const VertexSet ends{r, s};
    const VertexSet interior_ok = ancestors(g, ends) - ends;

    // Interior vertices are entered through an arrowhead and left through an arrowhead.
    std::vector<VertexId> pred(g.size(), r);
    VertexSet seen;
    std::deque<VertexId> queue;
    for (VertexId w : (g.children(r) | g.spouses(r)) & interior_ok) {
        seen.insert(w);
        queue.push_back(w);
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        const VertexSet out_with_head_at_v = g.spouses(v) | g.parents(v);
        if (out_with_head_at_v.contains(s)) {
            std::vector<VertexId> chain{s};
            for (VertexId u = v; u != r; u = pred[u]) chain.push_back(u);
            chain.push_back(r);
            std::reverse(chain.begin(), chain.end());
            return chain;
        }
        for (VertexId w : (g.spouses(v) & interior_ok) - seen) {
            seen.insert(w);
            pred[w] = v;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

namespace {

bool separable(const MixedGraph& g, VertexId a, VertexId b) {
    const VertexSet sa = VertexSet::single(a);
    const VertexSet sb = VertexSet::single(b);
    bool found = false;
    for_each_subset(g.vertices() - sa - sb, [&](VertexSet z) {
        if (!found && m_separated(g, sa, sb, z)) found = true;
    });
    return found;
}

}  // namespace

bool is_maximal(const MixedGraph& g, MaximalityMethod method) {
    if (!is_ancestral(g)) throw NotAncestral("maximality is defined for ancestral graphs only");
    for (VertexId a = 0; a < g.size(); ++a) {
        for (VertexId b = a + 1; b < g.size(); ++b) {
            if (g.adjacent(a, b)) continue;
            const bool ok = method == MaximalityMethod::InducingChain ? !find_primitive_inducing_chain(g, a, b).has_value()
                                                                      : separable(g, a, b);
            if (!ok) return false;
        }
    }
    return true;
}

CanonicalDag canonical_dag(const MixedGraph& g) {
    CanonicalDag cd;
    cd.base = MixedGraph(g.labels());
    cd.observed = g.vertices();
    for (const Edge& e : g.edges()) {
        if (e.kind == EdgeKind::Directed) {
            cd.base.add_directed(e.tail, e.head);
            continue;
        }
        const VertexId latent = cd.base.add_vertex("L_" + g.label(e.tail) + "_" + g.label(e.head));
        cd.base.add_directed(latent, e.tail);
        cd.base.add_directed(latent, e.head);
        cd.latents.insert(latent);
    }
    return cd;
}

MarginalCheck marginal_model_equal(const MixedGraph& g, std::size_t cap) {
    if (g.size() > cap) throw CapExceeded("marginal model comparison", g.size(), cap);
    const CanonicalDag cd = canonical_dag(g);
    MarginalCheck result;
    for_each_disjoint_triple(g.vertices(), [&](VertexSet a, VertexSet b, VertexSet c) {
        if (!result.equal) return;
        if (m_separated(g, a, b, c) != d_separated(cd.base, a, b, c)) {
            result.equal = false;
            result.counterexample = IndependenceTriple::make(a, b, c);
        }
    });
    return result;
}

IndependenceModel restricted_d_separation_model(const MixedGraph& dag, VertexSet observed) {
    if (observed != VertexSet::full(observed.size())) {
        throw std::invalid_argument("observed vertices must be the id prefix 0..k-1");
    }
    IndependenceModel m(observed.size());
    for_each_disjoint_triple(observed, [&](VertexSet a, VertexSet b, VertexSet c) {
        if (d_separated(dag, a, b, c)) m.insert(a, b, c);
    });
    return m;
}

}  // namespace mvrcg
