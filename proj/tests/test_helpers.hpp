#pragma once

#include <filesystem>
#include <string>

#include "mvrcg/graph_io.hpp"

#ifndef MVRCG_FIXTURE_DIR
#error "MVRCG_FIXTURE_DIR must point at the fixtures directory"
#endif

inline mvrcg::MixedGraph fixture(const std::string& name) {
    return mvrcg::load_graph(std::filesystem::path(MVRCG_FIXTURE_DIR) / (name + ".graph"));
}

// Compact form: statements separated by ';', e.g. graph("a -> b; b <-> c").
inline mvrcg::MixedGraph graph(std::string text) {
    for (char& ch : text) {
        if (ch == ';') ch = '\n';
    }
    return mvrcg::parse_graph_string(text);
}

// Set of vertices by label, e.g. set(g, {"a", "b"}).
inline mvrcg::VertexSet set(const mvrcg::MixedGraph& g, std::initializer_list<const char*> labels) {
    mvrcg::VertexSet s;
    for (const char* l : labels) s.insert(*g.find(l));
    return s;
}
