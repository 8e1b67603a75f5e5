#include "mvrcg/markov_properties.hpp"

#include <stdexcept>
#include <vector>

#include "mvrcg/errors.hpp"
#include "mvrcg/separation.hpp"

namespace mvrcg {

namespace {

void emit(IndependenceModel& m, VertexSet a, VertexSet b, VertexSet c) {
    if (a.empty() || b.empty()) return;
    m.insert(a, b, c);
}

void check_component_caps(const ChainDecomposition& dec, const PropertyCaps& caps) {
    for (VertexSet t : dec.components) {
        if (t.size() > caps.component) throw CapExceeded("chain component size", t.size(), caps.component);
    }
}

}  // namespace

std::string property_name(PropertyKind k) {
    switch (k) {
        case PropertyKind::P1:
            return "p1";
        case PropertyKind::P2:
            return "p2";
        case PropertyKind::P3:
            return "p3";
        case PropertyKind::P4:
            return "p4";
        case PropertyKind::MR:
            return "mr";
        case PropertyKind::TypeIV:
            return "iv";
        case PropertyKind::OrderedLocal:
            return "ordered";
        case PropertyKind::AltLocal:
            return "local";
        case PropertyKind::Global:
            return "global";
    }
    return "?";
}

PropertyKind parse_property(const std::string& name) {
    for (auto k : {PropertyKind::P1, PropertyKind::P2, PropertyKind::P3, PropertyKind::P4, PropertyKind::MR,
                   PropertyKind::TypeIV, PropertyKind::OrderedLocal, PropertyKind::AltLocal, PropertyKind::Global}) {
        if (property_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown property kind '" + name + "'");
}

IndependenceModel pairwise_triples(const MixedGraph& g, const ChainDecomposition& dec, PropertyKind variant,
                                   bool p4_both) {
    IndependenceModel m(g.size());
    for (VertexId i = 0; i < g.size(); ++i) {
        for (VertexId j = i + 1; j < g.size(); ++j) {
            if (g.adjacent(i, j)) continue;
            const VertexSet pair{i, j};
            const VertexSet si = VertexSet::single(i);
            const VertexSet sj = VertexSet::single(j);
            switch (variant) {
                case PropertyKind::P1:
                    emit(m, si, sj, (dec.past(i) | dec.past(j)) - pair);
                    break;
                case PropertyKind::P2:
                    emit(m, si, sj, anteriors(g, pair) - pair);
                    break;
                case PropertyKind::P3:
                    emit(m, si, sj, (g.parents(i) | g.parents(j)) - pair);
                    break;
                case PropertyKind::P4: {
                    const std::size_t ri = dec.component_rank[dec.component_of[i]];
                    const std::size_t rj = dec.component_rank[dec.component_of[j]];
                    const VertexId earlier = ri <= rj ? i : j;
                    emit(m, si, sj, g.parents(earlier));
                    if (p4_both && ri == rj) emit(m, si, sj, g.parents(j));
                    break;
                }
                default:
                    throw std::invalid_argument("pairwise_triples expects P1..P4");
            }
        }
    }
    return m;
}

IndependenceModel mr_triples(const MixedGraph& g, const ChainDecomposition& dec, const PropertyCaps& caps) {
    check_component_caps(dec, caps);
    IndependenceModel m(g.size());
    for (std::size_t t = 0; t < dec.size(); ++t) {
        const VertexSet pre = dec.pre(t);
        for_each_nonempty_subset(dec.component(t), [&](VertexSet a) {
            const auto parts = districts(g, a);
            if (parts.size() == 1) {
                const VertexSet pa = g.parents_of(a);
                emit(m, a, pre - pa, pa);
                return;
            }
            // Mutual independence of the parts, as each part against the rest of A.
            for (const VertexSet part : parts) emit(m, part, a - part, pre);
        });
    }
    return m;
}

IndependenceModel type_iv_triples(const MixedGraph& g, const ChainDecomposition& dec, const PropertyCaps& caps) {
    check_component_caps(dec, caps);
    IndependenceModel m(g.size());
    for (std::size_t t = 0; t < dec.size(); ++t) {
        const VertexSet comp = dec.component(t);
        const VertexSet pa_d = dec.parent_components(t);
        emit(m, comp, dec.nondescendant_components(t) - pa_d, pa_d);
        for_each_nonempty_subset(comp, [&](VertexSet a) {
            const VertexSet pa = g.parents_of(a);
            emit(m, a, pa_d - pa, pa);
            if (bidirected_connected(g, a)) {
                VertexSet nb = a;
                for (VertexId v : a) nb |= g.spouses(v);
                emit(m, a, comp - nb, pa_d);
            }
        });
    }
    return m;
}

VertexSet markov_blanket(const MixedGraph& g, VertexId x, VertexSet a) {
    if (!a.contains(x)) throw std::invalid_argument("markov_blanket: x must belong to A");
    if (!is_ancestrally_closed(g, a)) throw NotAncestrallyClosed("markov_blanket: A is not ancestrally closed");
    if (g.children(x).intersects(a)) throw HasChildInA("markov_blanket: x has a child in A");
    const VertexSet dis = district(g, x, a);
    return g.parents_of(dis) | (dis - VertexSet::single(x));
}

void check_consistent_order(const MixedGraph& g, std::span<const VertexId> order) {
    if (order.size() != g.size()) throw InconsistentOrder("order must list every vertex exactly once");
    VertexSet seen;
    for (VertexId v : order) {
        if (v >= g.size() || seen.contains(v)) throw InconsistentOrder("order must list every vertex exactly once");
        // Every ancestor of v must already be placed.
        if (!(ancestors(g, VertexSet::single(v)) - VertexSet::single(v)).is_subset_of(seen)) {
            throw InconsistentOrder("vertex " + g.label(v) + " precedes one of its ancestors");
        }
        seen.insert(v);
    }
}

IndependenceModel ordered_local_triples(const MixedGraph& g, std::span<const VertexId> order, const PropertyCaps& caps) {
    check_consistent_order(g, order);
    if (g.size() > caps.prefix) throw CapExceeded("ordered local prefix size", g.size(), caps.prefix);
    IndependenceModel m(g.size());
    VertexSet before;
    for (VertexId x : order) {
        const VertexSet sx = VertexSet::single(x);
        for_each_subset(before, [&](VertexSet rest) {
            const VertexSet a = rest | sx;
            if (!is_ancestrally_closed(g, a)) return;
            const VertexSet mb = markov_blanket(g, x, a);
            emit(m, sx, a - mb - sx, mb);
        });
        before.insert(x);
    }
    return m;
}

IndependenceModel alt_local_triples(const MixedGraph& g, const ChainDecomposition& dec) {
    IndependenceModel m(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
        const Relatives r = relatives(g, v, &dec);
        emit(m, VertexSet::single(v), r.nd - r.bd, r.pa);
    }
    return m;
}

IndependenceModel property_triples(const MixedGraph& g, const ChainDecomposition& dec, PropertyKind kind,
                                   const PropertyCaps& caps, bool p4_both) {
    switch (kind) {
        case PropertyKind::P1:
        case PropertyKind::P2:
        case PropertyKind::P3:
        case PropertyKind::P4:
            return pairwise_triples(g, dec, kind, p4_both);
        case PropertyKind::MR:
            return mr_triples(g, dec, caps);
        case PropertyKind::TypeIV:
            return type_iv_triples(g, dec, caps);
        case PropertyKind::OrderedLocal:
            return ordered_local_triples(g, dec.vertex_order, caps);
        case PropertyKind::AltLocal:
            return alt_local_triples(g, dec);
        case PropertyKind::Global:
            return global_model(g, caps.global);
    }
    throw std::invalid_argument("unknown property kind");
}

}  // namespace mvrcg
