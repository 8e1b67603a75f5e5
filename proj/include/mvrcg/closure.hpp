#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvrcg/independence.hpp"

namespace mvrcg {

enum class Axiom { Symmetry, Decomposition, WeakUnion, Contraction, Intersection, Composition };

std::string axiom_name(Axiom a);

struct AxiomSet {
    bool symmetry = true;
    bool decomposition = true;
    bool weak_union = true;
    bool contraction = true;
    bool intersection = false;
    bool composition = false;

    static constexpr AxiomSet semi_graphoid() { return {}; }
    static constexpr AxiomSet graphoid() { return {true, true, true, true, true, false}; }
    static constexpr AxiomSet compositional_semi_graphoid() { return {true, true, true, true, false, true}; }
    static constexpr AxiomSet compositional_graphoid() { return {true, true, true, true, true, true}; }

    /// Accepts "sg", "g", "csg", "cg".
    static AxiomSet parse(const std::string& name);

    bool operator==(const AxiomSet&) const = default;
};

inline constexpr std::size_t kDefaultClosureCap = 7;

/// Least superset of m closed under every enabled axiom. Throws CapExceeded when the ground set
/// exceeds `cap` (the engine keeps a 4^n membership bitmap).
///
/// Triples are canonical, so symmetry always holds; the flag is accepted for completeness.
IndependenceModel close(const IndependenceModel& m, const AxiomSet& ax, std::size_t cap = kDefaultClosureCap);

struct AxiomViolation {
    Axiom axiom;
    std::vector<IndependenceTriple> premises;
    IndependenceTriple conclusion;

    std::string format(const MixedGraph* g = nullptr) const;
};

struct SatisfiesResult {
    bool satisfied = true;
    std::optional<AxiomViolation> violation;

    explicit operator bool() const { return satisfied; }
};

/// True iff close(m, ax) == m; otherwise reports one rule instance whose conclusion is missing.
SatisfiesResult satisfies(const IndependenceModel& m, const AxiomSet& ax, std::size_t cap = kDefaultClosureCap);

/// close(m1, ax) == close(m2, ax). Throws std::invalid_argument on differing ground sets.
bool equivalent_under(const IndependenceModel& m1, const IndependenceModel& m2, const AxiomSet& ax,
                      std::size_t cap = kDefaultClosureCap);

}  // namespace mvrcg
