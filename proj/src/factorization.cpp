#include "mvrcg/factorization.hpp"

#include <algorithm>

#include "mvrcg/errors.hpp"

namespace mvrcg {

VertexSet barren(const MixedGraph& g, VertexSet h) {
    VertexSet out;
    for (VertexId v : h) {
        const VertexSet proper_de = descendants(g, VertexSet::single(v)) - VertexSet::single(v);
        if (!proper_de.intersects(h)) out.insert(v);
    }
    return out;
}

VertexSet tail_of(const MixedGraph& g, VertexSet h) {
    const VertexSet an = ancestors(g, h);
    const VertexSet dis = district_of_set(g, h, an);
    return (dis - h) | g.parents_of(dis);
}

bool is_head(const MixedGraph& g, VertexSet h) {
    if (h.empty() || barren(g, h) != h) return false;
    const VertexSet an = ancestors(g, h);
    return h.is_subset_of(district(g, h.first(), an));
}

std::vector<HeadTail> heads(const MixedGraph& g, std::size_t cap) {
    if (g.size() > cap) throw CapExceeded("head enumeration", g.size(), cap);
    std::vector<HeadTail> out;
    for_each_nonempty_subset(g.vertices(), [&](VertexSet h) {
        if (is_head(g, h)) out.push_back({h, tail_of(g, h)});
    });
    std::sort(out.begin(), out.end(), [](const HeadTail& x, const HeadTail& y) { return lex_less(x.head, y.head); });
    return out;
}

Factorization head_partition(const MixedGraph& g, VertexSet a) {
    if (!is_ancestrally_closed(g, a)) throw NotAncestrallyClosed("head_partition: set is not ancestrally closed");
    Factorization f{a, {}};
    VertexSet w = a;
    while (!w.empty()) {
        VertexSet taken;
        for (VertexSet d : districts(g, w)) {
            const VertexSet h = barren(g, d);
            if (!is_head(g, h)) throw HeadTestFailed("block {" + g.format_set(h) + "} is not a head");
            f.factors.push_back({h, tail_of(g, h)});
            taken |= h;
        }
        w -= taken;
    }
    return f;
}

Factorization factorize_mvr(const MixedGraph& g, const ChainDecomposition& dec) {
    Factorization f{g.vertices(), {}};
    for (std::size_t t : dec.component_order) {
        const VertexSet comp = dec.component(t);
        f.factors.push_back({comp, g.parents_of(comp)});
    }
    return f;
}

Factorization factorize_component_dag(const MixedGraph& g, const ChainDecomposition& dec) {
    Factorization f{g.vertices(), {}};
    for (std::size_t t : dec.component_order) f.factors.push_back({dec.component(t), dec.parent_components(t)});
    return f;
}

std::string format_factor(const MixedGraph& g, const HeadTail& f) {
    std::string out = "p(" + g.format_set(f.head);
    if (!f.tail.empty()) out += " | " + g.format_set(f.tail);
    return out + ")";
}

std::string format_factorization(const MixedGraph& g, const Factorization& f) {
    std::string out;
    for (const auto& factor : f.factors) {
        if (!out.empty()) out += " * ";
        out += format_factor(g, factor);
    }
    return out.empty() ? "1" : out;
}

nlohmann::json factorization_to_json(const MixedGraph& g, const Factorization& f) {
    auto labels = [&g](VertexSet s) {
        nlohmann::json arr = nlohmann::json::array();
        for (VertexId v : s) arr.push_back(g.label(v));
        return arr;
    };
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& factor : f.factors) factors.push_back({{"head", labels(factor.head)}, {"tail", labels(factor.tail)}});
    return {{"scope", labels(f.scope)}, {"factors", factors}};
}

}  // namespace mvrcg
