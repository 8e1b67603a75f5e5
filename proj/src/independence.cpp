#include "mvrcg/independence.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvrcg/errors.hpp"

namespace mvrcg {

void require_disjoint(VertexSet x, VertexSet y, VertexSet z) {
    if (x.empty() || y.empty()) throw DisjointnessViolation("X and Y must be nonempty");
    if (x.intersects(y) || x.intersects(z) || y.intersects(z)) {
        throw DisjointnessViolation("X, Y and Z must be pairwise disjoint");
    }
}

IndependenceTriple IndependenceTriple::make(VertexSet a, VertexSet b, VertexSet c) {
    require_disjoint(a, b, c);
    if (lex_less(b, a)) std::swap(a, b);
    return {a, b, c};
}

bool operator<(const IndependenceTriple& x, const IndependenceTriple& y) {
    if (x.a_ != y.a_) return lex_less(x.a_, y.a_);
    if (x.b_ != y.b_) return lex_less(x.b_, y.b_);
    return lex_less(x.c_, y.c_);
}

std::string IndependenceTriple::format(const MixedGraph* g) const {
    auto show = [g](VertexSet s) {
        if (g != nullptr) return "{" + g->format_set(s) + "}";
        std::string out = "{";
        for (VertexId v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
        return out + "}";
    };
    return "<" + show(a_) + " _||_ " + show(b_) + " | " + show(c_) + ">";
}

bool IndependenceModel::insert(const IndependenceTriple& t) {
    if (!t.support().is_subset_of(VertexSet::full(ground_size_))) {
        throw std::out_of_range("triple " + t.format() + " outside ground set of size " + std::to_string(ground_size_));
    }
    return triples_.insert(t).second;
}

bool IndependenceModel::contains(VertexSet a, VertexSet b, VertexSet c) const {
    if (a.empty() || b.empty() || a.intersects(b) || a.intersects(c) || b.intersects(c)) return false;
    return contains(IndependenceTriple::make(a, b, c));
}

bool IndependenceModel::is_subset_of(const IndependenceModel& other) const {
    return std::includes(other.triples_.begin(), other.triples_.end(), triples_.begin(), triples_.end());
}

IndependenceModel IndependenceModel::minus(const IndependenceModel& other) const {
    IndependenceModel out(ground_size_);
    for (const auto& t : triples_) {
        if (!other.contains(t)) out.triples_.insert(t);
    }
    return out;
}

nlohmann::json model_to_json(const IndependenceModel& m, const std::vector<std::string>& labels) {
    auto name = [&labels](VertexId v) { return v < labels.size() ? labels[v] : std::to_string(v); };
    auto block = [&name](VertexSet s) {
        nlohmann::json arr = nlohmann::json::array();
        for (VertexId v : s) arr.push_back(name(v));
        return arr;
    };
    nlohmann::json vertices = nlohmann::json::array();
    for (VertexId v = 0; v < m.ground_size(); ++v) vertices.push_back(name(v));
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& t : m) triples.push_back({{"A", block(t.a())}, {"B", block(t.b())}, {"C", block(t.c())}});
    return {{"vertices", vertices}, {"triples", triples}};
}

IndependenceModel model_from_json(const nlohmann::json& j, std::vector<std::string>* labels_out) {
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    if (labels.size() > kMaxVertices) throw std::invalid_argument("too many vertices in model");
    auto lookup = [&labels](const nlohmann::json& v) {
        const std::string key = v.is_string() ? v.get<std::string>() : v.dump();
        const auto it = std::find(labels.begin(), labels.end(), key);
        if (it == labels.end()) throw std::invalid_argument("unknown vertex '" + key + "' in triple");
        return static_cast<VertexId>(it - labels.begin());
    };
    auto block = [&lookup](const nlohmann::json& arr) {
        VertexSet s;
        for (const auto& v : arr) s.insert(lookup(v));
        return s;
    };
    IndependenceModel m(labels.size());
    for (const auto& t : j.at("triples")) {
        m.insert(block(t.at("A")), block(t.at("B")), t.contains("C") ? block(t.at("C")) : VertexSet{});
    }
    if (labels_out != nullptr) *labels_out = std::move(labels);
    return m;
}

}  // namespace mvrcg
