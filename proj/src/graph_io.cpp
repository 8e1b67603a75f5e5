#include "mvrcg/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "mvrcg/errors.hpp"

namespace mvrcg {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

MixedGraph parse_graph(std::istream& in) {
    MixedGraph g;
    auto vertex = [&g](const std::string& label) {
        if (auto id = g.find(label)) return *id;
        return g.add_vertex(label);
    };

    std::string raw;
    for (int lineno = 1; std::getline(in, raw); ++lineno) {
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto tokens = split_ws(line);
        const auto fail = [&](const std::string& why) {
            return GraphFormatError("line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
        };
        try {
            if (tokens[0] == "vertex") {
                if (tokens.size() != 2) throw fail("expected 'vertex <label>'");
                if (g.find(tokens[1])) throw fail("vertex declared twice");
                g.add_vertex(tokens[1]);
            } else if (tokens.size() == 3 && tokens[1] == "->") {
                g.add_directed(vertex(tokens[0]), vertex(tokens[2]));
            } else if (tokens.size() == 3 && tokens[1] == "<-") {
                g.add_directed(vertex(tokens[2]), vertex(tokens[0]));
            } else if (tokens.size() == 3 && tokens[1] == "<->") {
                g.add_bidirected(vertex(tokens[0]), vertex(tokens[2]));
            } else if (tokens.size() == 3 && (tokens[1] == "--" || tokens[1] == "-")) {
                throw fail("undirected edges are not supported");
            } else {
                throw fail("unrecognised line");
            }
        } catch (const GraphFormatError& e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            throw fail(what);
        }
    }
    return g;
}

MixedGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

MixedGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphFormatError("cannot open graph file " + path.string());
    return parse_graph(in);
}

std::string format_graph(const MixedGraph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.size(); ++v) out << "vertex " << g.label(v) << '\n';
    for (const Edge& e : g.edges()) {
        out << g.label(e.tail) << (e.kind == EdgeKind::Directed ? " -> " : " <-> ") << g.label(e.head) << '\n';
    }
    return out.str();
}

void save_graph(const MixedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw GraphFormatError("cannot write graph file " + path.string());
    out << format_graph(g);
}

std::string to_dot(const MixedGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quote_dot(name) << " {\n";
    for (VertexId v = 0; v < g.size(); ++v) out << "  " << quote_dot(g.label(v)) << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << quote_dot(g.label(e.tail)) << " -> " << quote_dot(g.label(e.head));
        if (e.kind == EdgeKind::Bidirected) out << " [dir=both]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_key(const MixedGraph& g) {
    std::string out = "n" + std::to_string(g.size()) + ":";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(e.tail) + (e.kind == EdgeKind::Directed ? ">" : "<>") + std::to_string(e.head);
    }
    return out;
}

}  // namespace mvrcg
