#include "mvrcg/graph_core.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mvrcg/errors.hpp"

namespace mvrcg {

namespace {

VertexSet closure_over(const MixedGraph& g, VertexSet start, VertexSet (MixedGraph::*step)(VertexId) const) {
    VertexSet seen = start;
    VertexSet frontier = start;
    while (!frontier.empty()) {
        VertexSet next;
        for (VertexId v : frontier) next |= (g.*step)(v);
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

// Shortest bidirected path from `from` to `to` inside `within`; both endpoints included.
std::vector<VertexId> bidirected_path(const MixedGraph& g, VertexId from, VertexId to, VertexSet within) {
    std::vector<VertexId> prev(g.size(), from);
    VertexSet seen = VertexSet::single(from);
    std::deque<VertexId> queue{from};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (VertexId w : (g.spouses(v) & within) - seen) {
            seen.insert(w);
            prev[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<VertexId> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string format_walk(const MixedGraph& g, const std::vector<VertexId>& walk) {
    std::string out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i > 0) out += g.has_directed(walk[i - 1], walk[i]) ? " -> " : " <-> ";
        out += g.label(walk[i]);
    }
    return out;
}

}  // namespace

VertexSet ancestors(const MixedGraph& g, VertexSet x) { return closure_over(g, x, &MixedGraph::parents); }

VertexSet anteriors(const MixedGraph& g, VertexSet x) {
    // Anterior paths allow undirected edges as well as directed edges pointing toward X; the
    // graph type has no undirected edges, so only the directed step remains.
    return closure_over(g, x, &MixedGraph::parents);
}

VertexSet descendants(const MixedGraph& g, VertexSet x) { return closure_over(g, x, &MixedGraph::children); }

VertexSet district(const MixedGraph& g, VertexId v, VertexSet within) {
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (VertexId w : frontier) next |= g.spouses(w);
        frontier = (next & within) - seen;
        seen |= frontier;
    }
    return seen;
}

VertexSet district_of_set(const MixedGraph& g, VertexSet b, VertexSet within) {
    VertexSet out;
    for (VertexId v : b) {
        if (!out.contains(v)) out |= district(g, v, within);
    }
    return out;
}

std::vector<VertexSet> districts(const MixedGraph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        const VertexSet d = district(g, left.first(), within);
        out.push_back(d);
        left -= d;
    }
    return out;
}

bool bidirected_connected(const MixedGraph& g, VertexSet s) {
    return s.empty() || district(g, s.first(), s) == s;
}

bool is_ancestrally_closed(const MixedGraph& g, VertexSet a) { return ancestors(g, a) == a; }

bool has_directed_cycle(const MixedGraph& g) {
    VertexSet placed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (VertexId v : g.vertices() - placed) {
            if (g.parents(v).is_subset_of(placed)) {
                placed.insert(v);
                progress = true;
            }
        }
    }
    return placed != g.vertices();
}

bool is_dag(const MixedGraph& g) { return !g.has_bidirected_edges() && !has_directed_cycle(g); }

VertexSet InducedSubgraph::lift(VertexSet local) const {
    VertexSet out;
    for (VertexId v : local) out.insert(original[v]);
    return out;
}

InducedSubgraph induced_subgraph(const MixedGraph& g, VertexSet a) {
    InducedSubgraph sub;
    std::vector<VertexId> local(g.size(), 0);
    for (VertexId v : a) {
        local[v] = sub.graph.add_vertex(g.label(v));
        sub.original.push_back(v);
    }
    for (const Edge& e : g.edges()) {
        if (a.contains(e.tail) && a.contains(e.head)) sub.graph.add_edge({e.kind, local[e.tail], local[e.head]});
    }
    return sub;
}

VertexSet ChainDecomposition::pre(std::size_t t) const {
    VertexSet out;
    for (std::size_t r = component_rank[t] + 1; r < component_order.size(); ++r) out |= components[component_order[r]];
    return out;
}

VertexSet ChainDecomposition::parent_components(std::size_t t) const {
    VertexSet out;
    for (std::size_t p : component_parents[t]) out |= components[p];
    return out;
}

VertexSet ChainDecomposition::nondescendant_components(std::size_t t) const {
    std::vector<bool> reach(components.size(), false);
    std::vector<std::size_t> stack{t};
    reach[t] = true;
    while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        for (std::size_t ch : component_children[c]) {
            if (!reach[ch]) {
                reach[ch] = true;
                stack.push_back(ch);
            }
        }
    }
    VertexSet out;
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (!reach[c]) out |= components[c];
    }
    return out;
}

ChainDecomposition validate_chain_graph(const MixedGraph& g) {
    ChainDecomposition dec;
    dec.components = districts(g);
    const std::size_t k = dec.components.size();
    dec.component_of.assign(g.size(), 0);
    for (std::size_t t = 0; t < k; ++t) {
        for (VertexId v : dec.components[t]) dec.component_of[v] = t;
    }

    // A directed edge inside a component closes a cycle with the bidirected path back.
    for (const Edge& e : g.edges()) {
        if (e.kind != EdgeKind::Directed) continue;
        const std::size_t t = dec.component_of[e.tail];
        if (t != dec.component_of[e.head]) continue;
        std::vector<VertexId> walk{e.tail};
        for (VertexId v : bidirected_path(g, e.head, e.tail, dec.components[t])) walk.push_back(v);
        throw PartiallyDirectedCycle(walk, "partially directed cycle: " + format_walk(g, walk));
    }

    dec.component_parents.assign(k, {});
    dec.component_children.assign(k, {});
    for (const Edge& e : g.edges()) {
        if (e.kind != EdgeKind::Directed) continue;
        const std::size_t from = dec.component_of[e.tail];
        const std::size_t to = dec.component_of[e.head];
        auto& ch = dec.component_children[from];
        if (std::find(ch.begin(), ch.end(), to) == ch.end()) {
            ch.push_back(to);
            dec.component_parents[to].push_back(from);
        }
    }
    for (auto& v : dec.component_parents) std::sort(v.begin(), v.end());
    for (auto& v : dec.component_children) std::sort(v.begin(), v.end());

    // Component DAG cycle search (iterative DFS with colours).
    std::vector<int> colour(k, 0);
    std::vector<std::size_t> parent_in_dfs(k, 0);
    for (std::size_t root = 0; root < k; ++root) {
        if (colour[root] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [c, next] = stack.back();
            if (next == dec.component_children[c].size()) {
                colour[c] = 2;
                stack.pop_back();
                continue;
            }
            const std::size_t ch = dec.component_children[c][next++];
            if (colour[ch] == 0) {
                colour[ch] = 1;
                parent_in_dfs[ch] = c;
                stack.push_back({ch, 0});
            } else if (colour[ch] == 1) {
                // Component cycle ch -> ... -> c -> ch.
                std::vector<std::size_t> comps{c};
                while (comps.back() != ch) comps.push_back(parent_in_dfs[comps.back()]);
                std::reverse(comps.begin(), comps.end());
                std::vector<VertexId> walk;
                for (std::size_t i = 0; i < comps.size(); ++i) {
                    const std::size_t from = comps[i];
                    const std::size_t to = comps[(i + 1) % comps.size()];
                    const VertexSet tails = dec.components[from];
                    VertexId u = 0;
                    VertexId v = 0;
                    for (VertexId cand : tails) {
                        const VertexSet hit = g.children(cand) & dec.components[to];
                        if (!hit.empty()) {
                            u = cand;
                            v = hit.first();
                            break;
                        }
                    }
                    if (walk.empty()) {
                        walk.push_back(u);
                    } else {
                        const auto bridge = bidirected_path(g, walk.back(), u, dec.components[from]);
                        walk.insert(walk.end(), bridge.begin() + 1, bridge.end());
                    }
                    walk.push_back(v);
                }
                const auto close = bidirected_path(g, walk.back(), walk.front(), dec.components[dec.component_of[walk.front()]]);
                walk.insert(walk.end(), close.begin() + 1, close.end());
                throw PartiallyDirectedCycle(walk, "partially directed cycle: " + format_walk(g, walk));
            }
        }
    }

    // Responses first: a component is placed once all its children are placed.
    dec.component_rank.assign(k, 0);
    std::vector<bool> placed(k, false);
    while (dec.component_order.size() < k) {
        for (std::size_t t = 0; t < k; ++t) {
            if (placed[t]) continue;
            const auto& ch = dec.component_children[t];
            if (std::all_of(ch.begin(), ch.end(), [&](std::size_t c) { return placed[c]; })) {
                placed[t] = true;
                dec.component_rank[t] = dec.component_order.size();
                dec.component_order.push_back(t);
                break;
            }
        }
    }

    // Ancestors first, smallest id among the ready vertices.
    dec.vertex_rank.assign(g.size(), 0);
    VertexSet done;
    while (dec.vertex_order.size() < g.size()) {
        for (VertexId v : g.vertices() - done) {
            if (g.parents(v).is_subset_of(done)) {
                done.insert(v);
                dec.vertex_rank[v] = dec.vertex_order.size();
                dec.vertex_order.push_back(v);
                break;
            }
        }
    }
    return dec;
}

bool is_chain_graph(const MixedGraph& g) {
    // Contract each bidirected component and require the quotient to be a DAG with no
    // directed edge inside a component.
    const auto comps = districts(g);
    std::vector<VertexSet> comp_parents(comps.size());
    std::vector<std::size_t> of(g.size(), 0);
    for (std::size_t t = 0; t < comps.size(); ++t) {
        for (VertexId v : comps[t]) of[v] = t;
    }
    for (std::size_t t = 0; t < comps.size(); ++t) {
        const VertexSet pa = g.parents_of(comps[t]);
        for (VertexId v : comps[t]) {
            if (g.parents(v).intersects(comps[t])) return false;
        }
        for (VertexId p : pa) comp_parents[t].insert(static_cast<VertexId>(of[p]));
    }
    VertexSet placed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t t = 0; t < comps.size(); ++t) {
            if (!placed.contains(static_cast<VertexId>(t)) && comp_parents[t].is_subset_of(placed)) {
                placed.insert(static_cast<VertexId>(t));
                progress = true;
            }
        }
    }
    return placed.size() == comps.size();
}

std::optional<ChainDecomposition> try_chain_decomposition(const MixedGraph& g) {
    try {
        return validate_chain_graph(g);
    } catch (const PartiallyDirectedCycle&) {
        return std::nullopt;
    }
}

Relatives relatives(const MixedGraph& g, VertexId v, const ChainDecomposition* dec) {
    Relatives r;
    r.pa = g.parents(v);
    r.nb = g.spouses(v);
    r.bd = r.pa | r.nb;
    r.de = descendants(g, VertexSet::single(v));
    r.nd = g.vertices() - r.de - VertexSet::single(v);
    if (dec != nullptr) r.pst = dec->past(v);
    r.dis = district(g, v);
    return r;
}

}  // namespace mvrcg
