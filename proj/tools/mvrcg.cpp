#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mvrcg/closure.hpp"
#include "mvrcg/distributions.hpp"
#include "mvrcg/errors.hpp"
#include "mvrcg/factorization.hpp"
#include "mvrcg/graph_core.hpp"
#include "mvrcg/graph_io.hpp"
#include "mvrcg/intervention.hpp"
#include "mvrcg/markov_properties.hpp"
#include "mvrcg/separation.hpp"
#include "mvrcg/structure_checks.hpp"
#include "mvrcg/sweep.hpp"

using namespace mvrcg;
using nlohmann::json;

namespace {

bool g_json = false;

VertexSet parse_labels(const MixedGraph& g, const std::string& csv) {
    VertexSet s;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        const std::string label = item.substr(b, e - b + 1);
        const auto v = g.find(label);
        if (!v) throw std::invalid_argument("unknown vertex '" + label + "'");
        s.insert(*v);
    }
    return s;
}

json labels_json(const MixedGraph& g, VertexSet s) {
    json arr = json::array();
    for (VertexId v : s) arr.push_back(g.label(v));
    return arr;
}

json walk_json(const MixedGraph& g, const std::vector<VertexId>& walk) {
    json arr = json::array();
    for (VertexId v : walk) arr.push_back(g.label(v));
    return arr;
}

std::string walk_text(const MixedGraph& g, const std::vector<VertexId>& walk) {
    std::string out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i > 0) {
            const VertexId u = walk[i - 1];
            const VertexId v = walk[i];
            if (g.has_bidirected(u, v)) out += " <-> ";
            else if (g.has_directed(u, v)) out += " -> ";
            else out += " <- ";
        }
        out += g.label(walk[i]);
    }
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

PropertyCaps caps_from_env() {
    PropertyCaps caps;
    caps.global = env_cap(caps.global);
    caps.component = env_cap(caps.component);
    caps.prefix = env_cap(caps.prefix);
    return caps;
}

int cmd_validate(const std::string& path) {
    const MixedGraph g = load_graph(path);
    try {
        const auto dec = validate_chain_graph(g);
        if (g_json) {
            std::cout << json{{"valid", true}, {"components", dec.size()}}.dump() << '\n';
        } else {
            std::cout << "valid MVR chain graph: " << g.size() << " vertices, " << dec.size() << " components\n";
        }
        return 0;
    } catch (const PartiallyDirectedCycle& e) {
        if (g_json) {
            std::cout << json{{"valid", false}, {"error", e.what()}, {"cycle", walk_json(g, e.cycle())}}.dump() << '\n';
        } else {
            std::cout << "invalid: " << e.what() << "\ncycle: " << walk_text(g, e.cycle()) << '\n';
        }
        return 1;
    }
}

int cmd_components(const std::string& path) {
    const MixedGraph g = load_graph(path);
    const auto dec = validate_chain_graph(g);
    if (g_json) {
        json comps = json::array();
        for (std::size_t t : dec.component_order) {
            json parents = json::array();
            for (std::size_t p : dec.component_parents[t]) parents.push_back(p);
            comps.push_back({{"id", t}, {"vertices", labels_json(g, dec.component(t))}, {"parent_components", parents},
                             {"pre", labels_json(g, dec.pre(t))}});
        }
        json order = json::array();
        for (VertexId v : dec.vertex_order) order.push_back(g.label(v));
        std::cout << json{{"components", comps}, {"vertex_order", order}}.dump(2) << '\n';
        return 0;
    }
    std::cout << "components (responses first):\n";
    for (std::size_t t : dec.component_order) {
        std::cout << "  T" << t << " = {" << g.format_set(dec.component(t)) << "}";
        const VertexSet pa = g.parents_of(dec.component(t));
        if (!pa.empty()) std::cout << "  pa = {" << g.format_set(pa) << "}";
        std::cout << '\n';
    }
    std::cout << "vertex order (ancestors first):";
    for (VertexId v : dec.vertex_order) std::cout << ' ' << g.label(v);
    std::cout << '\n';
    return 0;
}

int cmd_separate(const std::string& path, const std::string& xs, const std::string& ys, const std::string& zs,
                 const std::string& method) {
    const MixedGraph g = load_graph(path);
    const VertexSet x = parse_labels(g, xs);
    const VertexSet y = parse_labels(g, ys);
    const VertexSet z = parse_labels(g, zs);
    require_disjoint(x, y, z);
    bool separated = false;
    std::optional<std::vector<VertexId>> walk;
    if (method == "m") {
        walk = m_connecting_walk(g, x, y, z);
        separated = !walk;
    } else if (method == "mstar") {
        separated = m_star_separated(g, x, y, z);
    } else {
        separated = d_separated(g, x, y, z);
    }
    if (g_json) {
        json out = {{"separated", separated}, {"method", method}};
        if (walk) out["walk"] = walk_json(g, *walk);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (separated ? "SEPARATED" : "CONNECTED") << '\n';
        if (walk) std::cout << "walk: " << walk_text(g, *walk) << '\n';
    }
    return 0;
}

int cmd_properties(const std::string& path, const std::string& kind, const std::string& emit, bool p4_both) {
    const MixedGraph g = load_graph(path);
    const PropertyKind k = parse_property(kind);
    const auto dec = validate_chain_graph(g);
    const IndependenceModel m = property_triples(g, dec, k, caps_from_env(), p4_both);
    if (g_json || emit == "json") {
        std::cout << model_to_json(m, g.labels()).dump(2) << '\n';
        return 0;
    }
    for (const auto& t : m) std::cout << t.format(&g) << '\n';
    std::cerr << m.size() << " triples\n";
    return 0;
}

int cmd_closure(const std::string& in, const std::string& axioms, const std::string& out) {
    std::vector<std::string> labels;
    const IndependenceModel m = model_from_json(load_json(in), &labels);
    const IndependenceModel closed = close(m, AxiomSet::parse(axioms), env_cap(kDefaultClosureCap));
    write_text(out, model_to_json(closed, labels).dump(2) + "\n");
    std::cerr << m.size() << " -> " << closed.size() << " triples\n";
    return 0;
}

int cmd_equiv(const std::string& a, const std::string& b, const std::string& axioms) {
    std::vector<std::string> labels;
    const IndependenceModel ma = model_from_json(load_json(a), &labels);
    const IndependenceModel mb = model_from_json(load_json(b));
    const AxiomSet ax = AxiomSet::parse(axioms);
    const std::size_t cap = env_cap(kDefaultClosureCap);
    const IndependenceModel ca = close(ma, ax, cap);
    const IndependenceModel cb = close(mb, ax, cap);
    const bool equal = ca == cb;
    MixedGraph names(labels);
    std::optional<std::string> witness;
    if (!equal) {
        const auto only_a = ca.minus(cb);
        const auto only_b = cb.minus(ca);
        witness = only_a.size() > 0 ? "only in a: " + only_a.begin()->format(&names)
                                    : "only in b: " + only_b.begin()->format(&names);
    }
    if (g_json) {
        json out = {{"equivalent", equal}, {"axioms", axioms}};
        if (witness) out["witness"] = *witness;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (equal ? "EQUIVALENT" : "DIFFERENT") << '\n';
        if (witness) std::cout << *witness << '\n';
    }
    return equal ? 0 : 1;
}

int cmd_factorize(const std::string& path, const std::string& style, const std::string& set) {
    const MixedGraph g = load_graph(path);
    Factorization f;
    if (style == "admg") {
        if (has_directed_cycle(g)) throw NotADag("graph has a directed cycle");
        f = head_partition(g, set.empty() ? g.vertices() : parse_labels(g, set));
    } else {
        const auto dec = validate_chain_graph(g);
        f = style == "mvr" ? factorize_mvr(g, dec) : factorize_component_dag(g, dec);
    }
    if (g_json) {
        std::cout << factorization_to_json(g, f).dump(2) << '\n';
    } else {
        std::cout << format_factorization(g, f) << '\n';
    }
    return 0;
}

int cmd_check(const std::string& path, bool ancestral, bool maximal, bool marginal) {
    const MixedGraph g = load_graph(path);
    if (!ancestral && !maximal && !marginal) ancestral = maximal = marginal = true;
    json out = json::object();
    bool ok = true;
    std::optional<AncestralityResult> anc;
    if (ancestral || maximal) anc = is_ancestral(g);
    if (ancestral) {
        out["ancestral"] = anc->ancestral;
        ok = ok && anc->ancestral;
        if (!anc->ancestral) out["ancestral_witness"] = g.label(anc->witness_vertex);
    }
    if (maximal) {
        if (!anc->ancestral) {
            out["maximal"] = nullptr;
        } else {
            const bool m = is_maximal(g, MaximalityMethod::InducingChain);
            out["maximal"] = m;
            ok = ok && m;
            if (!m) {
                for (VertexId a = 0; a < g.size() && !out.contains("inducing_chain"); ++a) {
                    for (VertexId b = a + 1; b < g.size(); ++b) {
                        if (g.adjacent(a, b)) continue;
                        if (auto chain = find_primitive_inducing_chain(g, a, b)) {
                            out["inducing_chain"] = walk_json(g, *chain);
                            break;
                        }
                    }
                }
            }
        }
    }
    if (marginal) {
        const auto res = marginal_model_equal(g, env_cap(6));
        out["marginal_oracle"] = res.equal;
        ok = ok && res.equal;
        if (!res.equal) out["marginal_counterexample"] = res.counterexample->format(&g);
    }
    if (g_json) {
        std::cout << out.dump() << '\n';
    } else {
        for (auto it = out.begin(); it != out.end(); ++it) {
            std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
        }
    }
    return ok ? 0 : 1;
}

int cmd_numeric(const std::string& path, std::size_t seeds, double eps) {
    const MixedGraph g = load_graph(path);
    const auto dec = try_chain_decomposition(g);
    const auto cd = canonical_dag(g);
    const IndependenceModel global = global_model(g, env_cap(7));
    std::size_t ci_failures = 0;
    std::size_t factor_failures = 0;
    for (std::size_t s = 0; s < seeds; ++s) {
        const JointTable t = sample_latent_dag_distribution(cd, s);
        for (const auto& triple : global) {
            if (!ci_holds(t, triple, eps)) ++ci_failures;
        }
        std::vector<Factorization> fs{head_partition(g, g.vertices())};
        if (dec) {
            fs.push_back(factorize_mvr(g, *dec));
            fs.push_back(factorize_component_dag(g, *dec));
        }
        for (const auto& f : fs) {
            if (!verify_factorization(t, f, eps)) ++factor_failures;
        }
    }
    const bool ok = ci_failures == 0 && factor_failures == 0;
    if (g_json) {
        std::cout << json{{"seeds", seeds}, {"triples", global.size()}, {"ci_failures", ci_failures},
                          {"factorization_failures", factor_failures}, {"ok", ok}}.dump() << '\n';
    } else {
        std::cout << seeds << " distributions, " << global.size() << " triples each: " << ci_failures
                  << " independence failures, " << factor_failures << " factorization failures\n";
    }
    return ok ? 0 : 1;
}

int cmd_intervene(const std::string& path, const std::string& on, const std::string& out) {
    const MixedGraph g = load_graph(path);
    const MixedGraph h = intervene(g, parse_labels(g, on));
    write_text(out, format_graph(h));
    return 0;
}

struct SweepArgs {
    std::size_t max_n = 4;
    std::size_t random_n = 5;
    std::size_t random_count = 200;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::size_t numeric_seeds = 1;
    std::string cursor;
    std::string report;
    std::vector<std::string> fixtures;
};

int cmd_sweep(const SweepArgs& args) {
    SweepConfig config;
    config.exhaustive_max_n = args.max_n;
    config.random_n = args.random_n;
    config.random_count = args.random_count;
    config.seed = args.seed;
    config.workers = args.workers;
    config.numeric_seeds = args.numeric_seeds;
    config.closure_max_n = env_cap(config.closure_max_n);
    config.marginal_max_n = env_cap(config.marginal_max_n);
    if (!args.cursor.empty()) config.cursor = args.cursor;
    for (const auto& f : args.fixtures) config.graphs.push_back({std::filesystem::path(f).stem().string(), load_graph(f)});

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.report.empty() && args.report != "-") {
        file.open(args.report, args.cursor.empty() ? std::ios::trunc : std::ios::app);
        if (!file) throw std::runtime_error("cannot write " + args.report);
        out = &file;
    }
    std::map<std::string, std::size_t> failing_checks;
    const SweepSummary summary = run_equivalence_sweep(config, [&](const VerificationReport& r) {
        *out << r.to_json().dump() << '\n';
        for (const auto& c : r.checks) {
            if (c.status == CheckStatus::Fail) ++failing_checks[c.name];
        }
    });
    std::cerr << "sweep: " << summary.graphs << " graphs";
    if (summary.resumed_from > 0) std::cerr << " (resumed at " << summary.resumed_from << ")";
    std::cerr << ", " << summary.failed_graphs << " with failures\n";
    for (const auto& [name, count] : failing_checks) std::cerr << "  " << name << ": " << count << " failing graphs\n";
    return summary.failed_graphs == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MVR chain graph toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "Machine-readable JSON output");

    std::string graph;
    auto add_graph = [&graph](CLI::App* sub) { sub->add_option("--graph", graph, "Graph file")->required()->check(CLI::ExistingFile); };

    auto* validate = app.add_subcommand("validate", "Check the graph is an MVR chain graph");
    add_graph(validate);

    auto* components = app.add_subcommand("components", "Chain components and orders");
    add_graph(components);

    std::string xs, ys, zs, method = "m";
    auto* separate = app.add_subcommand("separate", "Test separation of X and Y given Z");
    add_graph(separate);
    separate->add_option("--x", xs, "Comma-separated labels")->required();
    separate->add_option("--y", ys, "Comma-separated labels")->required();
    separate->add_option("--z", zs, "Comma-separated labels");
    separate->add_option("--method", method, "m, mstar or d")->check(CLI::IsMember({"m", "mstar", "d"}));

    std::string kind, emit = "text";
    bool p4_both = false;
    auto* properties = app.add_subcommand("properties", "Emit the triples of a Markov property");
    add_graph(properties);
    properties->add_option("--kind", kind, "p1 p2 p3 p4 mr iv ordered local global")->required();
    properties->add_option("--emit", emit, "text or json")->check(CLI::IsMember({"text", "json"}));
    properties->add_flag("--p4-both", p4_both, "Emit both endpoint variants of p4 within a component");

    std::string in, out, axioms = "sg";
    auto* closure = app.add_subcommand("closure", "Close a model under an axiom set");
    closure->add_option("--in", in, "Model JSON")->required()->check(CLI::ExistingFile);
    closure->add_option("--axioms", axioms, "sg, g, csg or cg")->check(CLI::IsMember({"sg", "g", "csg", "cg"}));
    closure->add_option("--out", out, "Output file (default stdout)");

    std::string ma, mb;
    auto* equiv = app.add_subcommand("equiv", "Compare two models under an axiom set");
    equiv->add_option("--a", ma, "Model JSON")->required()->check(CLI::ExistingFile);
    equiv->add_option("--b", mb, "Model JSON")->required()->check(CLI::ExistingFile);
    equiv->add_option("--axioms", axioms, "sg, g, csg or cg")->check(CLI::IsMember({"sg", "g", "csg", "cg"}));

    std::string style = "mvr", set;
    auto* factorize = app.add_subcommand("factorize", "Print a factorization");
    add_graph(factorize);
    factorize->add_option("--style", style, "mvr, component-dag or admg")->check(CLI::IsMember({"mvr", "component-dag", "admg"}));
    factorize->add_option("--set", set, "Ancestral set for the admg style (default: all vertices)");

    bool ancestral = false, maximal = false, marginal = false;
    auto* check = app.add_subcommand("check", "Structural checks (all when no flag is given)");
    add_graph(check);
    check->add_flag("--ancestral", ancestral);
    check->add_flag("--maximal", maximal);
    check->add_flag("--marginal-oracle", marginal);

    std::size_t seeds = 5;
    double eps = 1e-9;
    auto* numeric = app.add_subcommand("numeric-check", "Check independences and factorizations on sampled distributions");
    add_graph(numeric);
    numeric->add_option("--seeds", seeds, "Number of sampled distributions");
    numeric->add_option("--eps", eps, "Absolute tolerance");

    std::string on;
    auto* intervene_cmd = app.add_subcommand("intervene", "Remove edges with an arrowhead at the given vertices");
    add_graph(intervene_cmd);
    intervene_cmd->add_option("--on", on, "Comma-separated labels")->required();
    intervene_cmd->add_option("--out", out, "Output graph file (default stdout)");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Equivalence sweep over enumerated and random graphs");
    sweep->add_option("--max-n", sweep_args.max_n, "Exhaustive enumeration up to this size");
    sweep->add_option("--random-n", sweep_args.random_n, "Size of random graphs");
    sweep->add_option("--random-count", sweep_args.random_count, "Number of random graphs");
    sweep->add_option("--seed", sweep_args.seed, "Random seed");
    sweep->add_option("--workers", sweep_args.workers, "Worker threads");
    sweep->add_option("--numeric-seeds", sweep_args.numeric_seeds, "Sampled distributions per graph (0 disables)");
    sweep->add_option("--cursor", sweep_args.cursor, "Resume file");
    sweep->add_option("--report", sweep_args.report, "Report file (default stdout)");
    sweep->add_option("--fixture", sweep_args.fixtures, "Extra graph file, checked first")->check(CLI::ExistingFile);

    std::string name = "G";
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    add_graph(dot);
    dot->add_option("--out", out, "Output file (default stdout)");
    dot->add_option("--name", name, "Graph name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(graph);
        if (*components) return cmd_components(graph);
        if (*separate) return cmd_separate(graph, xs, ys, zs, method);
        if (*properties) return cmd_properties(graph, kind, emit, p4_both);
        if (*closure) return cmd_closure(in, axioms, out);
        if (*equiv) return cmd_equiv(ma, mb, axioms);
        if (*factorize) return cmd_factorize(graph, style, set);
        if (*check) return cmd_check(graph, ancestral, maximal, marginal);
        if (*numeric) return cmd_numeric(graph, seeds, eps);
        if (*intervene_cmd) return cmd_intervene(graph, on, out);
        if (*sweep) return cmd_sweep(sweep_args);
        if (*dot) {
            write_text(out, to_dot(load_graph(graph), name));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
