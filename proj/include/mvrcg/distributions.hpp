#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mvrcg/factorization.hpp"
#include "mvrcg/independence.hpp"
#include "mvrcg/structure_checks.hpp"

namespace mvrcg {

/// Dense joint probability table over discrete variables.
///
/// Variables are identified by VertexId; entry index is mixed-radix with variables()[0] as the
/// least significant digit.
class JointTable {
public:
    JointTable() = default;
    /// Throws std::invalid_argument on size mismatch or negative entries.
    JointTable(std::vector<VertexId> variables, std::vector<int> cardinalities, std::vector<double> probabilities);

    const std::vector<VertexId>& variables() const { return variables_; }
    const std::vector<int>& cardinalities() const { return cardinalities_; }
    const std::vector<double>& probabilities() const { return probabilities_; }
    std::size_t entries() const { return probabilities_.size(); }
    VertexSet scope() const;
    double total() const;

    /// Marginal over `keep` (must be within scope), keeping the relative variable order.
    JointTable marginal(VertexSet keep) const;

    /// Same distribution with variables listed in `order` (a permutation of variables()).
    JointTable reordered(const std::vector<VertexId>& order) const;

    /// Probability of a full assignment given as one value per variable, in variables() order.
    double at(std::span<const int> assignment) const;

    /// Decodes entry `index` into `assignment` (resized to the variable count).
    void decode(std::size_t index, std::vector<int>& assignment) const;

private:
    std::vector<VertexId> variables_;
    std::vector<int> cardinalities_;
    std::vector<double> probabilities_;
};

inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 20;

/// Random strictly positive binary CPTs for every vertex of cd.base (each row drawn from a flat
/// Dirichlet), multiplied into the joint and marginalized to cd.observed. Deterministic in seed.
/// Throws CapExceeded when the full table would exceed 2^20 entries.
JointTable sample_latent_dag_distribution(const CanonicalDag& cd, std::uint64_t seed);

/// For every assignment with p(c) > 0: |p(a,b|c) - p(a|c) p(b|c)| <= eps.
bool ci_holds(const JointTable& t, const IndependenceTriple& triple, double eps);

/// For every assignment over f.scope: |p(x) - prod p(x_H | x_tail)| <= eps, with all
/// conditionals taken from t's marginals (0/0 factors count as 1).
bool verify_factorization(const JointTable& t, const Factorization& f, double eps);

}  // namespace mvrcg
