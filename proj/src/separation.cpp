#include "mvrcg/separation.hpp"

#include <algorithm>
#include <deque>

#include "mvrcg/errors.hpp"
#include "mvrcg/graph_core.hpp"

namespace mvrcg {

namespace {

// Arrival kinds for walk states.
enum Arrival : std::uint8_t { kStart = 0, kTail = 1, kHead = 2 };

// Collider paths inside `within` only.
UndirectedGraph augmented_within(const MixedGraph& g, VertexSet within) {
    UndirectedGraph out;
    out.adj.assign(g.size(), {});
    for (VertexId c : within) {
        VertexSet reach;
        // Vertices entered through an arrowhead may continue as colliders.
        VertexSet collider_ok;
        std::vector<VertexId> stack;
        for (VertexId w : g.adjacent_set(c) & within) {
            reach.insert(w);
            const bool head_at_w = g.has_directed(c, w) || g.has_bidirected(c, w);
            if (head_at_w && !collider_ok.contains(w)) {
                collider_ok.insert(w);
                stack.push_back(w);
            }
        }
        while (!stack.empty()) {
            const VertexId w = stack.back();
            stack.pop_back();
            // Leaving w with an arrowhead at w: w <-> u or u -> w.
            for (VertexId u : (g.spouses(w) | g.parents(w)) & within) {
                reach.insert(u);
                if (g.has_bidirected(w, u) && !collider_ok.contains(u)) {
                    collider_ok.insert(u);
                    stack.push_back(u);
                }
            }
        }
        reach.erase(c);
        out.adj[c] |= reach;
        for (VertexId u : reach) out.adj[u].insert(c);
    }
    return out;
}

}  // namespace

std::size_t UndirectedGraph::edge_count() const {
    std::size_t twice = 0;
    for (VertexSet s : adj) twice += s.size();
    return twice / 2;
}

VertexSet UndirectedGraph::reachable(VertexSet from, VertexSet blocked) const {
    VertexSet seen = from - blocked;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (VertexId v : frontier) next |= adj[v];
        frontier = next - seen - blocked;
        seen |= frontier;
    }
    return seen;
}

UndirectedGraph augmented_graph(const MixedGraph& g) { return augmented_within(g, g.vertices()); }

bool m_star_separated(const MixedGraph& g, VertexSet x, VertexSet y, VertexSet z) {
    require_disjoint(x, y, z);
    const VertexSet scope = ancestors(g, x | y | z);
    const UndirectedGraph aug = augmented_within(g, scope);
    return !aug.reachable(x, z).intersects(y);
}

std::optional<std::vector<VertexId>> m_connecting_walk(const MixedGraph& g, VertexSet x, VertexSet y, VertexSet z) {
    require_disjoint(x, y, z);
    const VertexSet an_z = ancestors(g, z);
    const std::size_t n = g.size();
    constexpr std::size_t kNoPred = static_cast<std::size_t>(-1);
    std::vector<bool> visited(3 * n, false);
    std::vector<std::size_t> pred(3 * n, kNoPred);
    std::deque<std::size_t> queue;
    for (VertexId v : x) {
        visited[3 * v + kStart] = true;
        queue.push_back(3 * v + kStart);
    }

    auto walk_to = [&](std::size_t state) {
        std::vector<VertexId> walk;
        for (std::size_t s = state; s != kNoPred; s = pred[s]) walk.push_back(static_cast<VertexId>(s / 3));
        std::reverse(walk.begin(), walk.end());
        return walk;
    };

    while (!queue.empty()) {
        const std::size_t state = queue.front();
        queue.pop_front();
        const auto v = static_cast<VertexId>(state / 3);
        const auto arrival = static_cast<Arrival>(state % 3);

        for (VertexId w : g.adjacent_set(v)) {
            const bool head_at_v = g.has_directed(w, v) || g.has_bidirected(v, w);
            if (arrival != kStart) {
                const bool collider = arrival == kHead && head_at_v;
                if (collider ? !an_z.contains(v) : z.contains(v)) continue;
            }
            const bool head_at_w = !g.has_directed(w, v);
            const std::size_t next = 3 * w + (head_at_w ? kHead : kTail);
            if (visited[next]) continue;
            visited[next] = true;
            pred[next] = state;
            if (y.contains(w)) return walk_to(next);
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

bool m_separated(const MixedGraph& g, VertexSet x, VertexSet y, VertexSet z) {
    return !m_connecting_walk(g, x, y, z).has_value();
}

bool d_separated(const MixedGraph& dag, VertexSet x, VertexSet y, VertexSet z) {
    if (!is_dag(dag)) throw NotADag("d-separation requires a graph with directed edges only and no cycles");
    require_disjoint(x, y, z);
    const VertexSet scope = ancestors(dag, x | y | z);
    UndirectedGraph moral;
    moral.adj.assign(dag.size(), {});
    for (VertexId v : scope) {
        const VertexSet pa = dag.parents(v);
        moral.adj[v] |= pa;
        for (VertexId p : pa) moral.adj[p] |= (pa - VertexSet::single(p)) | VertexSet::single(v);
    }
    return !moral.reachable(x, z).intersects(y);
}

namespace {

template <typename Sep>
IndependenceModel enumerate_model(const MixedGraph& g, std::size_t cap, Sep&& separated) {
    if (g.size() > cap) throw CapExceeded("global model enumeration", g.size(), cap);
    IndependenceModel m(g.size());
    for_each_disjoint_triple(g.vertices(), [&](VertexSet a, VertexSet b, VertexSet c) {
        if (separated(g, a, b, c)) m.insert(a, b, c);
    });
    return m;
}

}  // namespace

IndependenceModel global_model(const MixedGraph& g, std::size_t cap) {
    return enumerate_model(g, cap, [](const MixedGraph& h, VertexSet a, VertexSet b, VertexSet c) {
        return m_separated(h, a, b, c);
    });
}

IndependenceModel global_model_mstar(const MixedGraph& g, std::size_t cap) {
    return enumerate_model(g, cap, [](const MixedGraph& h, VertexSet a, VertexSet b, VertexSet c) {
        return m_star_separated(h, a, b, c);
    });
}

}  // namespace mvrcg
