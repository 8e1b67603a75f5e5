#include <doctest.h>

#include <random>

#include "mvrcg/closure.hpp"
#include "mvrcg/enumerate.hpp"
#include "mvrcg/errors.hpp"
#include "mvrcg/graph_core.hpp"
#include "mvrcg/markov_properties.hpp"
#include "mvrcg/separation.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace mvrcg;

namespace {

const AxiomSet kAllSets[] = {AxiomSet::semi_graphoid(), AxiomSet::graphoid(), AxiomSet::compositional_semi_graphoid(),
                             AxiomSet::compositional_graphoid()};

}  // namespace

TEST_CASE("triples are validated and canonical") {
    CHECK_THROWS_AS(IndependenceTriple::make({0}, {0, 1}, {}), DisjointnessViolation);
    CHECK_THROWS_AS(IndependenceTriple::make({0}, {1}, {1}), DisjointnessViolation);
    CHECK(IndependenceTriple::make({2}, {0}, {1}) == IndependenceTriple::make({0}, {2}, {1}));
    IndependenceModel m(3);
    CHECK_THROWS_AS(m.insert({0}, {3}, {}), std::out_of_range);
}

TEST_CASE("closure of small models") {
    for (const auto& ax : kAllSets) CHECK(close(IndependenceModel(4), ax).size() == 0);

    IndependenceModel m(3);
    m.insert({0}, {1, 2}, {});
    const auto c = close(m, AxiomSet::semi_graphoid());
    CHECK(c.contains(IndependenceTriple::make({0}, {1}, {})));
    CHECK(c.contains(IndependenceTriple::make({0}, {2}, {1})));
    CHECK(c.contains(IndependenceTriple::make({2}, {0}, {})));
    CHECK_THROWS_AS(close(IndependenceModel(8), AxiomSet::semi_graphoid()), CapExceeded);
}

TEST_CASE("closure engine agrees with a naive fixpoint on random models") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const IndependenceModel m = oracle::random_model(4, 1 + rng() % 5, rng);
        for (const auto& ax : kAllSets) CHECK(close(m, ax) == oracle::close(m, ax));
    }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const IndependenceModel small = oracle::random_model(4, 1 + rng() % 4, rng);
        IndependenceModel big = small;
        const IndependenceModel extra = oracle::random_model(4, 1 + rng() % 3, rng);
        for (const auto& t : extra) big.insert(t);
        for (const auto& ax : kAllSets) {
            const auto c = close(small, ax);
            CHECK(small.is_subset_of(c));
            CHECK(close(c, ax) == c);
            CHECK(c.is_subset_of(close(big, ax)));
        }
    }
}

TEST_CASE("satisfies reports a violated rule instance") {
    IndependenceModel m(3);
    m.insert({0}, {1, 2}, {});
    AxiomSet only_decomposition{true, true, false, false, false, false};
    const auto res = satisfies(m, only_decomposition);
    CHECK_FALSE(res.satisfied);
    REQUIRE(res.violation.has_value());
    CHECK(res.violation->axiom == Axiom::Decomposition);
    CHECK_FALSE(m.contains(res.violation->conclusion));
    for (const auto& p : res.violation->premises) CHECK(m.contains(p));

    for (const auto& ax : kAllSets) CHECK(satisfies(IndependenceModel(4), ax).satisfied);
}

TEST_CASE("separation models are compositional graphoids") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const MixedGraph& g : all_chain_graphs(n)) {
            const auto res = satisfies(global_model(g), AxiomSet::compositional_graphoid());
            CHECK(res.satisfied);
        }
    }
}

TEST_CASE("equivalence under axiom sets") {
    std::mt19937_64 rng(3);
    const IndependenceModel m = oracle::random_model(4, 3, rng);
    for (const auto& ax : kAllSets) CHECK(equivalent_under(m, m, ax));
    CHECK_THROWS_AS(equivalent_under(IndependenceModel(3), IndependenceModel(4), AxiomSet::semi_graphoid()), std::invalid_argument);

    const MixedGraph g = fixture("fig3");
    const auto dec = validate_chain_graph(g);
    CHECK(equivalent_under(mr_triples(g, dec), type_iv_triples(g, dec), AxiomSet::semi_graphoid()));
}

TEST_CASE("composition is needed for the local property on bidirected graphs") {
    const AxiomSet sg = AxiomSet::semi_graphoid();
    const AxiomSet csg = AxiomSet::compositional_semi_graphoid();

    // Two disjoint edges: {a,b} _||_ {c,d} follows from the vertex statements only by composition.
    const MixedGraph two = graph("a <-> b; c <-> d");
    const auto dec2 = validate_chain_graph(two);
    const auto local2 = alt_local_triples(two, dec2);
    const auto global2 = global_model(two);
    CHECK(close(local2, sg).is_subset_of(close(global2, sg)));
    CHECK_FALSE(equivalent_under(local2, global2, sg));
    CHECK(equivalent_under(local2, global2, csg));
    CHECK_FALSE(close(local2, sg).contains(IndependenceTriple::make(set(two, {"a", "b"}), set(two, {"c", "d"}), {})));

    // The bidirected 4-cycle is not such a witness: there the two closures already coincide.
    const MixedGraph cycle = graph("a <-> b; b <-> c; c <-> d; d <-> a");
    const auto dec4 = validate_chain_graph(cycle);
    CHECK(equivalent_under(alt_local_triples(cycle, dec4), global_model(cycle), sg));
}

TEST_CASE("model json round trip") {
    const MixedGraph g = fixture("fig3");
    const auto dec = validate_chain_graph(g);
    const auto m = mr_triples(g, dec);
    std::vector<std::string> labels;
    const auto back = model_from_json(model_to_json(m, g.labels()), &labels);
    CHECK(back == m);
    CHECK(labels == g.labels());
}
