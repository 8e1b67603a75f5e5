#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvrcg/mixed_graph.hpp"
#include "mvrcg/vertex_set.hpp"

namespace mvrcg {

/// <A ⫫ B | C> with A, B nonempty and A, B, C pairwise disjoint.
///
/// Stored in canonical form: A is the lexicographically smaller of the two outer blocks, so a
/// triple and its mirror compare equal.
class IndependenceTriple {
public:
    /// Validates and canonicalizes; throws DisjointnessViolation.
    static IndependenceTriple make(VertexSet a, VertexSet b, VertexSet c);

    VertexSet a() const { return a_; }
    VertexSet b() const { return b_; }
    VertexSet c() const { return c_; }
    VertexSet support() const { return a_ | b_ | c_; }

    bool operator==(const IndependenceTriple&) const = default;
    friend bool operator<(const IndependenceTriple& x, const IndependenceTriple& y);

    std::string format(const MixedGraph* g = nullptr) const;

private:
    IndependenceTriple(VertexSet a, VertexSet b, VertexSet c) : a_(a), b_(b), c_(c) {}

    VertexSet a_;
    VertexSet b_;
    VertexSet c_;
};

/// Throws DisjointnessViolation unless X, Y are nonempty and X, Y, Z pairwise disjoint.
void require_disjoint(VertexSet x, VertexSet y, VertexSet z);

/// Finite set of canonical triples over the ground set {0, ..., ground_size-1}.
class IndependenceModel {
public:
    using const_iterator = std::set<IndependenceTriple>::const_iterator;

    IndependenceModel() = default;
    explicit IndependenceModel(std::size_t ground_size) : ground_size_(ground_size) {}

    std::size_t ground_size() const { return ground_size_; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    /// Returns true if newly inserted. Throws std::out_of_range outside the ground set.
    bool insert(const IndependenceTriple& t);
    bool insert(VertexSet a, VertexSet b, VertexSet c) { return insert(IndependenceTriple::make(a, b, c)); }
    bool contains(const IndependenceTriple& t) const { return triples_.count(t) != 0; }
    bool contains(VertexSet a, VertexSet b, VertexSet c) const;

    bool is_subset_of(const IndependenceModel& other) const;
    /// Triples of this model missing from `other`.
    IndependenceModel minus(const IndependenceModel& other) const;

    const_iterator begin() const { return triples_.begin(); }
    const_iterator end() const { return triples_.end(); }

    bool operator==(const IndependenceModel& other) const {
        return ground_size_ == other.ground_size_ && triples_ == other.triples_;
    }

private:
    std::size_t ground_size_ = 0;
    std::set<IndependenceTriple> triples_;
};

/// JSON form: {"vertices": [labels...], "triples": [{"A": [...], "B": [...], "C": [...]}, ...]},
/// triples in canonical sorted order. Labels default to decimal ids when no graph is given.
nlohmann::json model_to_json(const IndependenceModel& m, const std::vector<std::string>& labels);
IndependenceModel model_from_json(const nlohmann::json& j, std::vector<std::string>* labels_out = nullptr);

}  // namespace mvrcg
