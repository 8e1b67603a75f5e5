#include <doctest.h>

#include <random>

#include "mvrcg/enumerate.hpp"
#include "mvrcg/errors.hpp"
#include "mvrcg/graph_core.hpp"
#include "mvrcg/graph_io.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace mvrcg;

TEST_CASE("mixed graph rejects malformed edges") {
    MixedGraph g(3);
    g.add_directed(0, 1);
    CHECK_THROWS_AS(g.add_directed(0, 1), GraphFormatError);
    CHECK_THROWS_AS(g.add_bidirected(1, 0), GraphFormatError);
    CHECK_THROWS_AS(g.add_directed(2, 2), GraphFormatError);
    CHECK_THROWS_AS(g.add_bidirected(0, 5), GraphFormatError);
    CHECK(g.adjacent(1, 0));
    CHECK(g.parents(1) == VertexSet{0});
}

TEST_CASE("graph text format") {
    const MixedGraph g = graph("vertex z; a -> b; b <-> c; # comment; d <- c");
    CHECK(g.size() == 5);
    CHECK(g.label(0) == "z");
    CHECK(g.has_directed(*g.find("a"), *g.find("b")));
    CHECK(g.has_bidirected(*g.find("c"), *g.find("b")));
    CHECK(g.has_directed(*g.find("c"), *g.find("d")));
    CHECK(parse_graph_string(format_graph(g)) == g);
    CHECK_THROWS_AS(graph("a -- b"), GraphFormatError);
    CHECK_THROWS_AS(graph("a -> b; b -> a"), GraphFormatError);
    CHECK_THROWS_AS(graph("a => b"), GraphFormatError);
    CHECK(to_dot(g).find("dir=both") != std::string::npos);
}

TEST_CASE("chain decomposition of the four-component fixture") {
    const MixedGraph g = fixture("fig2");
    const auto dec = validate_chain_graph(g);
    REQUIRE(dec.size() == 4);
    const std::vector<VertexSet> expected = {set(g, {"a", "b"}), set(g, {"c", "d"}), set(g, {"e", "f"}), set(g, {"g", "h"})};
    for (std::size_t i = 0; i < 4; ++i) CHECK(dec.component(dec.component_order[i]) == expected[i]);
    // pre of the first component is everything upstream; the last has nothing before it.
    CHECK(dec.pre(dec.component_order[0]) == (expected[1] | expected[2] | expected[3]));
    CHECK(dec.pre(dec.component_order[3]).empty());
    for (VertexId v : expected[0]) CHECK(relatives(g, v, &dec).pst == (expected[1] | expected[2] | expected[3]));
}

TEST_CASE("edgeless graph has singleton components and no component edges") {
    const auto dec = validate_chain_graph(MixedGraph(3));
    CHECK(dec.size() == 3);
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(dec.component(t).size() == 1);
        CHECK(dec.component_parents[t].empty());
        CHECK(dec.pre(t).empty() == (dec.component_rank[t] == 2));
    }
}

TEST_CASE("partially directed cycle is rejected with a witness") {
    const MixedGraph g = graph("a -> b; b <-> c; c -> a");
    CHECK_THROWS_AS(validate_chain_graph(g), PartiallyDirectedCycle);
    try {
        validate_chain_graph(g);
    } catch (const PartiallyDirectedCycle& e) {
        const auto& cyc = e.cycle();
        REQUIRE(cyc.size() >= 3);
        CHECK(cyc.front() == cyc.back());
        bool has_directed = false;
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
            const bool forward = g.has_directed(cyc[i], cyc[i + 1]);
            CHECK((forward || g.has_bidirected(cyc[i], cyc[i + 1])));
            has_directed |= forward;
        }
        CHECK(has_directed);
    }
    CHECK_FALSE(is_chain_graph(g));
    CHECK_FALSE(try_chain_decomposition(g).has_value());
}

TEST_CASE("ancestors and anteriors") {
    CHECK(ancestors(MixedGraph(3), VertexSet{1}) == VertexSet{1});
    const MixedGraph chain = graph("a -> b; b -> c");
    CHECK(ancestors(chain, set(chain, {"c"})) == chain.vertices());
    const MixedGraph mixed = graph("a <-> b; b -> c");
    CHECK(ancestors(mixed, set(mixed, {"c"})) == set(mixed, {"b", "c"}));
    const MixedGraph ab = graph("a -> b");
    CHECK(anteriors(ab, set(ab, {"b"})) == ab.vertices());

    for (std::size_t n = 1; n <= 4; ++n) {
        ChainGraphEnumerator e(n);
        while (auto g = e.next()) {
            for_each_subset(g->vertices(), [&](VertexSet x) {
                CHECK(anteriors(*g, x) == ancestors(*g, x));
                CHECK(ancestors(*g, x) == oracle::ancestors(*g, x));
            });
        }
    }
}

TEST_CASE("relatives") {
    const auto iso = relatives(MixedGraph(1), 0);
    CHECK(iso.pa.empty());
    CHECK(iso.nb.empty());
    CHECK(iso.bd.empty());
    CHECK(iso.nd.empty());
    CHECK(iso.de == VertexSet{0});
    // A vertex always lies in its own district.
    CHECK(iso.dis == VertexSet{0});

    const MixedGraph g = graph("a -> b; b <-> c");
    const auto r = relatives(g, *g.find("b"));
    CHECK(r.bd == set(g, {"a", "c"}));
    CHECK(r.dis == set(g, {"b", "c"}));
    CHECK(r.nd == set(g, {"a", "c"}));
}

TEST_CASE("pre of a single-component graph is empty") {
    const auto dec = validate_chain_graph(graph("a <-> b; b <-> c"));
    REQUIRE(dec.size() == 1);
    CHECK(pre_of_component(dec, 0).empty());
}

TEST_CASE("induced subgraph") {
    const MixedGraph g = graph("a -> b; b <-> c");
    CHECK(induced_subgraph(g, g.vertices()).graph == g);
    CHECK(induced_subgraph(g, {}).graph.size() == 0);
    const auto sub = induced_subgraph(g, set(g, {"b", "c"}));
    CHECK(sub.graph.size() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.has_bidirected(0, 1));
    CHECK(sub.lift(VertexSet{0}) == set(g, {"b"}));
}

TEST_CASE("enumeration counts match a reachability oracle") {
    auto oracle_count = [](std::size_t n) {
        const std::size_t pairs = n * (n - 1) / 2;
        std::size_t total = 1;
        for (std::size_t i = 0; i < pairs; ++i) total *= 4;
        std::size_t count = 0;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<PairState> states(pairs);
            std::size_t c = code;
            for (auto& s : states) {
                s = static_cast<PairState>(c % 4);
                c /= 4;
            }
            if (!oracle::has_partially_directed_cycle(graph_from_pair_states(n, states))) ++count;
        }
        return count;
    };
    CHECK(all_chain_graphs(1).size() == 1);
    CHECK(all_chain_graphs(2).size() == 4);
    for (std::size_t n = 3; n <= 4; ++n) CHECK(all_chain_graphs(n).size() == oracle_count(n));
}

TEST_CASE("chain graph check agrees with the cycle oracle on random mixed graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 2 + rng() % 5;
        std::vector<PairState> states(n * (n - 1) / 2);
        for (auto& s : states) s = static_cast<PairState>(rng() % 4);
        const MixedGraph g = graph_from_pair_states(n, states);
        const bool chain = !oracle::has_partially_directed_cycle(g);
        CHECK(is_chain_graph(g) == chain);
        const auto dec = try_chain_decomposition(g);
        CHECK(dec.has_value() == chain);
        if (!dec) continue;
        // Component order: a parent component never comes before its child.
        for (std::size_t t = 0; t < dec->size(); ++t) {
            for (std::size_t p : dec->component_parents[t]) CHECK(dec->component_rank[p] > dec->component_rank[t]);
        }
        for (const Edge& e : g.edges()) {
            if (e.kind == EdgeKind::Directed) CHECK(dec->vertex_rank[e.tail] < dec->vertex_rank[e.head]);
            else CHECK(dec->component_of[e.tail] == dec->component_of[e.head]);
        }
    }
}

TEST_CASE("random source is reproducible") {
    RandomChainGraphSource a(5, 42);
    RandomChainGraphSource b(5, 42);
    for (int i = 0; i < 50; ++i) {
        const MixedGraph g = a.next();
        CHECK(g == b.next());
        CHECK(is_chain_graph(g));
    }
}
