#include "mvrcg/enumerate.hpp"

#include "mvrcg/graph_core.hpp"

namespace mvrcg {

MixedGraph graph_from_pair_states(std::size_t n, const std::vector<PairState>& states) {
    MixedGraph g(n);
    std::size_t k = 0;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j, ++k) {
            switch (states[k]) {
                case PairState::None:
                    break;
                case PairState::Forward:
                    g.add_directed(i, j);
                    break;
                case PairState::Backward:
                    g.add_directed(j, i);
                    break;
                case PairState::Bidirected:
                    g.add_bidirected(i, j);
                    break;
            }
        }
    }
    return g;
}

ChainGraphEnumerator::ChainGraphEnumerator(std::size_t n) : n_(n), states_(n * (n - (n > 0 ? 1 : 0)) / 2, PairState::None) {}

std::optional<MixedGraph> ChainGraphEnumerator::next() {
    while (!exhausted_) {
        MixedGraph g = graph_from_pair_states(n_, states_);
        // Advance the base-4 counter.
        std::size_t k = 0;
        while (k < states_.size() && states_[k] == PairState::Bidirected) states_[k++] = PairState::None;
        if (k == states_.size()) {
            exhausted_ = true;
        } else {
            states_[k] = static_cast<PairState>(static_cast<int>(states_[k]) + 1);
        }
        if (is_chain_graph(g)) return g;
    }
    return std::nullopt;
}

RandomChainGraphSource::RandomChainGraphSource(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {}

MixedGraph RandomChainGraphSource::next() {
    std::vector<PairState> states(n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2);
    while (true) {
        // mt19937_64 output is fully specified, so `% 4` keeps streams identical across platforms.
        for (auto& s : states) s = static_cast<PairState>(rng_() % 4);
        MixedGraph g = graph_from_pair_states(n_, states);
        if (is_chain_graph(g)) return g;
    }
}

std::vector<MixedGraph> all_chain_graphs(std::size_t n) {
    std::vector<MixedGraph> out;
    ChainGraphEnumerator e(n);
    while (auto g = e.next()) out.push_back(std::move(*g));
    return out;
}

}  // namespace mvrcg
