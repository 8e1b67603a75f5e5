#include "mvrcg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

#include "mvrcg/closure.hpp"
#include "mvrcg/distributions.hpp"
#include "mvrcg/enumerate.hpp"
#include "mvrcg/factorization.hpp"
#include "mvrcg/graph_core.hpp"
#include "mvrcg/graph_io.hpp"
#include "mvrcg/markov_properties.hpp"
#include "mvrcg/separation.hpp"
#include "mvrcg/structure_checks.hpp"

namespace mvrcg {

std::size_t env_cap(std::size_t fallback) {
    const char* raw = std::getenv("MVRCG_MAX_N");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (*end != '\0' || value == 0) return fallback;
    return static_cast<std::size_t>(value);
}

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::Skipped:
            return "skipped";
    }
    return "unknown";
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json cs = nlohmann::json::object();
    for (const auto& c : checks) {
        nlohmann::json entry = {{"status", check_status_name(c.status)}, {"ms", c.millis}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        cs[c.name] = entry;
    }
    nlohmann::json out = {{"index", index}, {"source", source}, {"graph", key}, {"n", vertices}, {"checks", cs},
                          {"failures", failures()}, {"ms", millis}};
    if (!name.empty()) out["name"] = name;
    return out;
}

const std::vector<std::string>& sweep_check_names() {
    static const std::vector<std::string> names = {"chain", "mstar",     "mr",       "iv",
                                                   "ordered", "local",   "p1",       "p2",
                                                   "p3",    "p4",        "ancestral", "maximal",
                                                   "marginal", "factorization", "numeric"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;

class CheckRunner {
public:
    explicit CheckRunner(VerificationReport& report) : report_(report) {}

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        CheckResult r{name, CheckStatus::Pass, {}, 0.0};
        const auto t0 = Clock::now();
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.detail = std::string("exception: ") + e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report_.checks.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why) {
        report_.checks.push_back({name, CheckStatus::Skipped, why, 0.0});
    }

private:
    VerificationReport& report_;
};

void fail(CheckResult& r, const std::string& detail) {
    r.status = CheckStatus::Fail;
    r.detail = detail;
}

// Names a triple present in one closure and not the other.
std::string closure_mismatch(const MixedGraph& g, const IndependenceModel& got, const IndependenceModel& want) {
    const IndependenceModel missing = want.minus(got);
    if (missing.size() > 0) return "missing " + missing.begin()->format(&g);
    const IndependenceModel extra = got.minus(want);
    if (extra.size() > 0) return "extra " + extra.begin()->format(&g);
    return {};
}

struct Comparison {
    const char* check;
    PropertyKind kind;
    AxiomSet axioms;
};

const Comparison kComparisons[] = {
    {"mr", PropertyKind::MR, AxiomSet::semi_graphoid()},
    {"iv", PropertyKind::TypeIV, AxiomSet::semi_graphoid()},
    {"ordered", PropertyKind::OrderedLocal, AxiomSet::semi_graphoid()},
    {"local", PropertyKind::AltLocal, AxiomSet::compositional_semi_graphoid()},
    {"p1", PropertyKind::P1, AxiomSet::compositional_graphoid()},
    {"p2", PropertyKind::P2, AxiomSet::compositional_graphoid()},
    {"p3", PropertyKind::P3, AxiomSet::compositional_graphoid()},
    {"p4", PropertyKind::P4, AxiomSet::compositional_graphoid()},
};

bool same_factors(Factorization a, Factorization b) {
    auto by_head = [](const HeadTail& x, const HeadTail& y) { return lex_less(x.head, y.head); };
    std::sort(a.factors.begin(), a.factors.end(), by_head);
    std::sort(b.factors.begin(), b.factors.end(), by_head);
    return a.scope == b.scope && a.factors == b.factors;
}

}  // namespace

VerificationReport verify_graph(const MixedGraph& g, const SweepConfig& config) {
    VerificationReport report;
    report.key = graph_key(g);
    report.vertices = g.size();
    const auto t0 = Clock::now();
    CheckRunner runner(report);

    const auto dec = try_chain_decomposition(g);
    const bool acyclic = !has_directed_cycle(g);
    const bool closable = g.size() <= config.closure_max_n;

    runner.run("chain", [&](CheckResult& r) {
        if (!dec) {
            r.status = CheckStatus::Skipped;
            r.detail = "not an MVR chain graph";
        }
    });

    std::optional<IndependenceModel> global;
    if (acyclic && closable) {
        runner.run("mstar", [&](CheckResult& r) {
            global = global_model(g, config.closure_max_n);
            const auto mstar = global_model_mstar(g, config.closure_max_n);
            if (!(mstar == *global)) fail(r, closure_mismatch(g, mstar, *global));
        });
    } else {
        runner.skip("mstar", acyclic ? "above closure size limit" : "directed cycle");
    }

    for (const auto& cmp : kComparisons) {
        if (!dec || !global) {
            runner.skip(cmp.check, !dec ? "not an MVR chain graph" : "above closure size limit");
            continue;
        }
        runner.run(cmp.check, [&](CheckResult& r) {
            const auto raw = property_triples(g, *dec, cmp.kind);
            const auto got = close(raw, cmp.axioms, config.closure_max_n);
            const auto want = close(*global, cmp.axioms, config.closure_max_n);
            if (!(got == want)) fail(r, closure_mismatch(g, got, want));
        });
    }

    if (dec) {
        runner.run("ancestral", [&](CheckResult& r) {
            const auto res = is_ancestral(g);
            if (!res) fail(r, "arrowhead at " + g.label(res.witness_vertex) + " on an edge to its descendant");
        });
        runner.run("maximal", [&](CheckResult& r) {
            const bool chain_ok = is_maximal(g, MaximalityMethod::InducingChain);
            const bool sep_ok = is_maximal(g, MaximalityMethod::SeparatorSearch);
            if (!chain_ok || !sep_ok) fail(r, std::string("inducing-chain=") + (chain_ok ? "1" : "0") + " separator=" + (sep_ok ? "1" : "0"));
        });
    } else {
        runner.skip("ancestral", "not an MVR chain graph");
        runner.skip("maximal", "not an MVR chain graph");
    }

    if (dec && g.size() <= config.marginal_max_n) {
        runner.run("marginal", [&](CheckResult& r) {
            const auto res = marginal_model_equal(g, config.marginal_max_n);
            if (!res) fail(r, "differs on " + res.counterexample->format(&g));
        });
    } else {
        runner.skip("marginal", dec ? "above marginal size limit" : "not an MVR chain graph");
    }

    std::optional<Factorization> mvr;
    std::optional<Factorization> comp_dag;
    if (dec) {
        runner.run("factorization", [&](CheckResult& r) {
            mvr = factorize_mvr(g, *dec);
            comp_dag = factorize_component_dag(g, *dec);
            const auto hp = head_partition(g, g.vertices());
            if (!same_factors(hp, *mvr)) fail(r, "head partition " + format_factorization(g, hp) + " vs " + format_factorization(g, *mvr));
        });
    } else {
        runner.skip("factorization", "not an MVR chain graph");
    }

    if (dec && config.numeric_seeds > 0 && mvr && global) {
        runner.run("numeric", [&](CheckResult& r) {
            const auto cd = canonical_dag(g);
            for (std::size_t s = 0; s < config.numeric_seeds && r.status == CheckStatus::Pass; ++s) {
                const auto t = sample_latent_dag_distribution(cd, config.seed * 1000003ULL + s);
                if (!verify_factorization(t, *mvr, config.eps)) fail(r, "factorize_mvr violated");
                else if (!verify_factorization(t, *comp_dag, config.eps)) fail(r, "factorize_component_dag violated");
                for (const auto& triple : *global) {
                    if (r.status != CheckStatus::Pass) break;
                    if (!ci_holds(t, triple, config.eps)) fail(r, "ci fails for " + triple.format(&g));
                }
            }
        });
    } else {
        runner.skip("numeric", "disabled or prerequisites missing");
    }

    report.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return report;
}

namespace {

struct Job {
    std::string source;
    std::string name;
    MixedGraph graph;
};

std::vector<Job> build_jobs(const SweepConfig& config) {
    std::vector<Job> jobs;
    for (const auto& ng : config.graphs) jobs.push_back({"fixture", ng.name, ng.graph});
    for (std::size_t n = 1; n <= config.exhaustive_max_n; ++n) {
        ChainGraphEnumerator e(n);
        while (auto g = e.next()) jobs.push_back({"exhaustive", {}, std::move(*g)});
    }
    if (config.random_count > 0) {
        RandomChainGraphSource src(config.random_n, config.seed);
        for (std::size_t i = 0; i < config.random_count; ++i) jobs.push_back({"random", {}, src.next()});
    }
    return jobs;
}

std::size_t read_cursor(const SweepConfig& config) {
    if (!config.cursor || !std::filesystem::exists(*config.cursor)) return 0;
    std::ifstream in(*config.cursor);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return 0;
    }
    if (j.value("seed", std::uint64_t{0}) != config.seed) return 0;
    return j.value("index", std::size_t{0});
}

void write_cursor(const SweepConfig& config, std::size_t next) {
    if (!config.cursor) return;
    const auto tmp = std::filesystem::path(config.cursor->string() + ".tmp");
    {
        std::ofstream out(tmp);
        out << nlohmann::json{{"seed", config.seed}, {"index", next}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, *config.cursor);
}

}  // namespace

SweepSummary run_equivalence_sweep(const SweepConfig& config, const std::function<void(const VerificationReport&)>& emit) {
    const std::vector<Job> jobs = build_jobs(config);
    SweepSummary summary;
    summary.resumed_from = std::min(read_cursor(config), jobs.size());

    std::vector<std::optional<VerificationReport>> done(jobs.size());
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{summary.resumed_from};

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            VerificationReport r = verify_graph(jobs[i].graph, config);
            r.index = i;
            r.source = jobs[i].source;
            r.name = jobs[i].name;
            {
                std::lock_guard lock(mu);
                done[i] = std::move(r);
            }
            ready.notify_all();
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, config.workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);

    for (std::size_t i = summary.resumed_from; i < jobs.size(); ++i) {
        VerificationReport r;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return done[i].has_value(); });
            r = std::move(*done[i]);
            done[i].reset();
        }
        emit(r);
        ++summary.graphs;
        if (r.failures() > 0) ++summary.failed_graphs;
        write_cursor(config, i + 1);
    }
    for (auto& t : pool) t.join();
    return summary;
}

}  // namespace mvrcg
