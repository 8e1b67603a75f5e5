#include <doctest.h>

#include <cmath>

#include "mvrcg/distributions.hpp"
#include "mvrcg/enumerate.hpp"
#include "mvrcg/errors.hpp"
#include "mvrcg/graph_core.hpp"
#include "mvrcg/separation.hpp"
#include "mvrcg/structure_checks.hpp"
#include "test_helpers.hpp"

using namespace mvrcg;

namespace {

JointTable product_of_bits(double pa, double pb) {
    return JointTable({0, 1}, {2, 2}, {(1 - pa) * (1 - pb), pa * (1 - pb), (1 - pa) * pb, pa * pb});
}

}  // namespace

TEST_CASE("joint table basics") {
    const JointTable t({3, 1}, {2, 3}, {0.1, 0.2, 0.05, 0.15, 0.3, 0.2});
    CHECK(t.entries() == 6);
    CHECK(t.scope() == VertexSet{1, 3});
    CHECK(t.total() == doctest::Approx(1.0));
    const int assignment[] = {1, 2};
    CHECK(t.at(assignment) == doctest::Approx(0.2));

    const JointTable m = t.marginal({1});
    CHECK(m.variables() == std::vector<VertexId>{1});
    CHECK(m.probabilities()[0] == doctest::Approx(0.3));
    CHECK(m.probabilities()[2] == doctest::Approx(0.5));

    const JointTable r = t.reordered({1, 3});
    const int swapped[] = {2, 1};
    CHECK(r.at(swapped) == doctest::Approx(0.2));
    CHECK(r.marginal({3}).probabilities() == t.marginal({3}).probabilities());

    CHECK_THROWS_AS(JointTable({0}, {2}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(JointTable({0}, {2}, {0.5, -0.1}), std::invalid_argument);
    CHECK_THROWS_AS(t.marginal({0}), std::invalid_argument);
}

TEST_CASE("sampled latent-DAG tables") {
    const auto single = sample_latent_dag_distribution(canonical_dag(MixedGraph(1)), 1);
    CHECK(single.entries() == 2);
    CHECK(single.total() == doctest::Approx(1.0));

    const auto cd = canonical_dag(fixture("fig3"));
    const auto a = sample_latent_dag_distribution(cd, 9);
    const auto b = sample_latent_dag_distribution(cd, 9);
    CHECK(a.probabilities() == b.probabilities());
    CHECK(a.scope() == cd.observed);
    CHECK(a.total() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(sample_latent_dag_distribution(cd, 10).probabilities() == a.probabilities());

    MixedGraph big(21);
    CHECK_THROWS_AS(sample_latent_dag_distribution(canonical_dag(big), 0), CapExceeded);
}

TEST_CASE("bidirected edge induces marginal dependence") {
    const MixedGraph g = graph("a <-> b");
    const auto cd = canonical_dag(g);
    const auto t = IndependenceTriple::make({0}, {1}, {});
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK_FALSE(ci_holds(sample_latent_dag_distribution(cd, seed), t, 1e-9));
}

TEST_CASE("independence test") {
    const auto t = IndependenceTriple::make({0}, {1}, {});
    CHECK(ci_holds(product_of_bits(0.3, 0.8), t, 1e-12));
    const JointTable copy({0, 1}, {2, 2}, {0.5, 0.0, 0.0, 0.5});
    CHECK_FALSE(ci_holds(copy, t, 1e-9));

    // Symmetric in the two blocks and indifferent to the table's variable order.
    const auto cd = canonical_dag(fixture("fig3"));
    const auto table = sample_latent_dag_distribution(cd, 4);
    const auto reversed = table.reordered({6, 5, 4, 3, 2, 1, 0});
    for (const auto& tr : std::vector<IndependenceTriple>{IndependenceTriple::make({0, 1}, {5, 6}, {4}),
                                                          IndependenceTriple::make({0}, {6}, {}),
                                                          IndependenceTriple::make({1}, {4}, {6})}) {
        const bool holds = ci_holds(table, tr, 1e-9);
        CHECK(holds == ci_holds(reversed, tr, 1e-9));
        CHECK(holds == ci_holds(table, IndependenceTriple::make(tr.b(), tr.a(), tr.c()), 1e-9));
    }
}

TEST_CASE("factorization check") {
    const JointTable t = product_of_bits(0.2, 0.7);
    CHECK(verify_factorization(t, Factorization{{0, 1}, {{{0, 1}, {}}}}, 1e-12));
    CHECK(verify_factorization(t, Factorization{{0, 1}, {{{0}, {}}, {{1}, {}}}}, 1e-12));
    const JointTable copy({0, 1}, {2, 2}, {0.5, 0.0, 0.0, 0.5});
    CHECK_FALSE(verify_factorization(copy, Factorization{{0, 1}, {{{0}, {}}, {{1}, {}}}}, 1e-9));
}

TEST_CASE("latent-DAG tables respect separation and both chain factorizations") {
    RandomChainGraphSource src(5, 17);
    for (std::uint64_t i = 0; i < 20; ++i) {
        const MixedGraph g = src.next();
        const auto dec = validate_chain_graph(g);
        const auto t = sample_latent_dag_distribution(canonical_dag(g), i);
        for (const auto& tr : global_model(g)) CHECK(ci_holds(t, tr, 1e-9));
        CHECK(verify_factorization(t, factorize_mvr(g, dec), 1e-9));
        CHECK(verify_factorization(t, factorize_component_dag(g, dec), 1e-9));
    }
}

TEST_CASE("alternative local statement fails numerically when a spouse has a child") {
    const MixedGraph g = graph("0 <-> 1; 0 -> 2");
    const auto t = sample_latent_dag_distribution(canonical_dag(g), 3);
    CHECK_FALSE(ci_holds(t, IndependenceTriple::make(set(g, {"1"}), set(g, {"2"}), {}), 1e-9));
}
