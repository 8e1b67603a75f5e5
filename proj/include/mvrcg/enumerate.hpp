#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mvrcg/mixed_graph.hpp"

namespace mvrcg {

/// Per-pair edge state used by both generators.
enum class PairState : std::uint8_t { None = 0, Forward = 1, Backward = 2, Bidirected = 3 };

/// Builds the graph for one assignment of states to the pairs (i<j) in row-major order.
MixedGraph graph_from_pair_states(std::size_t n, const std::vector<PairState>& states);

/// Every labeled MVR chain graph on n vertices, in increasing base-4 order of pair states.
class ChainGraphEnumerator {
public:
    explicit ChainGraphEnumerator(std::size_t n);

    std::optional<MixedGraph> next();

private:
    std::size_t n_;
    std::vector<PairState> states_;
    bool exhausted_ = false;
};

/// Seeded stream of random MVR chain graphs: uniform pair states, non-chain graphs rejected.
class RandomChainGraphSource {
public:
    RandomChainGraphSource(std::size_t n, std::uint64_t seed);

    MixedGraph next();

private:
    std::size_t n_;
    std::mt19937_64 rng_;
};

/// Collects the full exhaustive enumeration; intended for n <= 5.
std::vector<MixedGraph> all_chain_graphs(std::size_t n);

}  // namespace mvrcg
