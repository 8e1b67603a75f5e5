#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvrcg/mixed_graph.hpp"

namespace mvrcg {

/// Reads MVRCG_MAX_N; returns `fallback` when unset or unparsable.
std::size_t env_cap(std::size_t fallback);

enum class CheckStatus { Pass, Fail, Skipped };

std::string check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
    double millis = 0.0;
};

/// One line of the sweep report.
struct VerificationReport {
    std::size_t index = 0;
    std::string source;
    std::string name;
    std::string key;
    std::size_t vertices = 0;
    std::vector<CheckResult> checks;
    double millis = 0.0;

    std::size_t failures() const;
    nlohmann::json to_json() const;
};

/// Check names in report order; every report lists each exactly once.
const std::vector<std::string>& sweep_check_names();

struct NamedGraph {
    std::string name;
    MixedGraph graph;
};

struct SweepConfig {
    /// Exhaustive enumeration for n = 1..exhaustive_max_n (0 disables).
    std::size_t exhaustive_max_n = 4;
    std::size_t random_n = 5;
    std::size_t random_count = 200;
    std::uint64_t seed = 1;
    /// Extra graphs checked first, e.g. fixtures.
    std::vector<NamedGraph> graphs;
    /// Closure-based checks are skipped above this size.
    std::size_t closure_max_n = 5;
    std::size_t marginal_max_n = 6;
    /// Latent-DAG numeric cross-check per graph; 0 disables.
    std::size_t numeric_seeds = 1;
    double eps = 1e-9;
    std::size_t workers = 1;
    /// Resume file holding {"seed", "index"} of the next unreported graph.
    std::optional<std::filesystem::path> cursor;
};

struct SweepSummary {
    std::size_t graphs = 0;
    std::size_t failed_graphs = 0;
    std::size_t resumed_from = 0;
};

/// Runs every configured check on one graph. Never throws; errors become failed checks.
VerificationReport verify_graph(const MixedGraph& g, const SweepConfig& config);

/// Fixture graphs, then exhaustive n = 1..max, then seeded random graphs. `emit` receives each
/// report in that order regardless of which worker finished first.
SweepSummary run_equivalence_sweep(const SweepConfig& config, const std::function<void(const VerificationReport&)>& emit);

}  // namespace mvrcg
