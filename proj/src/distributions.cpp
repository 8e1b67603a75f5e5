#include "mvrcg/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mvrcg/errors.hpp"
#include "mvrcg/graph_core.hpp"

namespace mvrcg {

namespace {

// Maps assignments of a table onto entry indices of a table over a subset of its variables.
class Projector {
public:
    Projector(const JointTable& from, const JointTable& to) : strides_(from.variables().size(), 0) {
        std::size_t stride = 1;
        for (std::size_t j = 0; j < to.variables().size(); ++j) {
            const auto it = std::find(from.variables().begin(), from.variables().end(), to.variables()[j]);
            if (it == from.variables().end()) throw std::invalid_argument("projection target not within source scope");
            strides_[static_cast<std::size_t>(it - from.variables().begin())] = stride;
            stride *= static_cast<std::size_t>(to.cardinalities()[j]);
        }
    }

    std::size_t operator()(const std::vector<int>& assignment) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < assignment.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(assignment[i]);
        return idx;
    }

private:
    std::vector<std::size_t> strides_;
};

// Strictly positive exponential variate from the raw engine output.
double positive_exponential(std::mt19937_64& rng) {
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    return -std::log(u);
}

}  // namespace

JointTable::JointTable(std::vector<VertexId> variables, std::vector<int> cardinalities, std::vector<double> probabilities)
    : variables_(std::move(variables)), cardinalities_(std::move(cardinalities)), probabilities_(std::move(probabilities)) {
    if (variables_.size() != cardinalities_.size()) throw std::invalid_argument("one cardinality per variable required");
    VertexSet seen;
    std::size_t expected = 1;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] >= kMaxVertices || seen.contains(variables_[i])) throw std::invalid_argument("duplicate or out-of-range variable");
        seen.insert(variables_[i]);
        if (cardinalities_[i] < 1) throw std::invalid_argument("cardinality must be positive");
        expected *= static_cast<std::size_t>(cardinalities_[i]);
    }
    if (probabilities_.size() != expected) throw std::invalid_argument("probability table has the wrong size");
    if (std::any_of(probabilities_.begin(), probabilities_.end(), [](double p) { return !(p >= 0.0); })) {
        throw std::invalid_argument("probabilities must be nonnegative");
    }
}

VertexSet JointTable::scope() const {
    VertexSet s;
    for (VertexId v : variables_) s.insert(v);
    return s;
}

double JointTable::total() const {
    double sum = 0.0;
    for (double p : probabilities_) sum += p;
    return sum;
}

void JointTable::decode(std::size_t index, std::vector<int>& assignment) const {
    assignment.resize(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const auto card = static_cast<std::size_t>(cardinalities_[i]);
        assignment[i] = static_cast<int>(index % card);
        index /= card;
    }
}

double JointTable::at(std::span<const int> assignment) const {
    if (assignment.size() != variables_.size()) throw std::invalid_argument("assignment has the wrong length");
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (assignment[i] < 0 || assignment[i] >= cardinalities_[i]) throw std::out_of_range("assignment value out of range");
        idx += stride * static_cast<std::size_t>(assignment[i]);
        stride *= static_cast<std::size_t>(cardinalities_[i]);
    }
    return probabilities_[idx];
}

JointTable JointTable::marginal(VertexSet keep) const {
    if (!keep.is_subset_of(scope())) throw std::invalid_argument("marginal outside table scope");
    std::vector<VertexId> vars;
    std::vector<int> cards;
    std::size_t size = 1;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (!keep.contains(variables_[i])) continue;
        vars.push_back(variables_[i]);
        cards.push_back(cardinalities_[i]);
        size *= static_cast<std::size_t>(cardinalities_[i]);
    }
    JointTable out(std::move(vars), std::move(cards), std::vector<double>(size, 0.0));
    const Projector project(*this, out);
    std::vector<int> assignment;
    for (std::size_t idx = 0; idx < probabilities_.size(); ++idx) {
        decode(idx, assignment);
        out.probabilities_[project(assignment)] += probabilities_[idx];
    }
    return out;
}

JointTable JointTable::reordered(const std::vector<VertexId>& order) const {
    std::vector<int> cards;
    for (VertexId v : order) {
        const auto it = std::find(variables_.begin(), variables_.end(), v);
        if (it == variables_.end()) throw std::invalid_argument("reorder: unknown variable");
        cards.push_back(cardinalities_[static_cast<std::size_t>(it - variables_.begin())]);
    }
    JointTable out(order, std::move(cards), std::vector<double>(probabilities_.size(), 0.0));
    if (out.scope() != scope()) throw std::invalid_argument("reorder must be a permutation of the variables");
    const Projector project(*this, out);
    std::vector<int> assignment;
    for (std::size_t idx = 0; idx < probabilities_.size(); ++idx) {
        decode(idx, assignment);
        out.probabilities_[project(assignment)] = probabilities_[idx];
    }
    return out;
}

JointTable sample_latent_dag_distribution(const CanonicalDag& cd, std::uint64_t seed) {
    const MixedGraph& dag = cd.base;
    const std::size_t n = dag.size();
    if (n >= 64 || (std::size_t{1} << n) > kMaxTableEntries) {
        throw CapExceeded("latent DAG joint table entries", n >= 64 ? ~std::size_t{0} : std::size_t{1} << n, kMaxTableEntries);
    }
    if (!is_dag(dag)) throw NotADag("canonical DAG must be acyclic with directed edges only");

    // cpt[v][row] = P(X_v = 1 | parent row); rows index parents in increasing id order.
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> cpt(n);
    for (VertexId v = 0; v < n; ++v) {
        const std::size_t rows = std::size_t{1} << dag.parents(v).size();
        cpt[v].resize(rows);
        for (double& p1 : cpt[v]) {
            const double g0 = positive_exponential(rng);
            const double g1 = positive_exponential(rng);
            p1 = g1 / (g0 + g1);
        }
    }

    std::vector<VertexId> vars(n);
    for (VertexId v = 0; v < n; ++v) vars[v] = v;
    std::vector<double> joint(std::size_t{1} << n, 1.0);
    for (std::size_t idx = 0; idx < joint.size(); ++idx) {
        double p = 1.0;
        for (VertexId v = 0; v < n; ++v) {
            std::size_t row = 0;
            std::size_t bit = 0;
            for (VertexId u : dag.parents(v)) row |= ((idx >> u) & 1U) << bit++;
            const double p1 = cpt[v][row];
            p *= ((idx >> v) & 1U) != 0 ? p1 : 1.0 - p1;
        }
        joint[idx] = p;
    }
    const JointTable full(std::move(vars), std::vector<int>(n, 2), std::move(joint));
    return full.marginal(cd.observed);
}

bool ci_holds(const JointTable& t, const IndependenceTriple& triple, double eps) {
    const JointTable abc = t.marginal(triple.support());
    const JointTable ac = abc.marginal(triple.a() | triple.c());
    const JointTable bc = abc.marginal(triple.b() | triple.c());
    const JointTable c = abc.marginal(triple.c());
    const Projector to_ac(abc, ac);
    const Projector to_bc(abc, bc);
    const Projector to_c(abc, c);
    std::vector<int> assignment;
    for (std::size_t idx = 0; idx < abc.entries(); ++idx) {
        abc.decode(idx, assignment);
        const double pc = c.probabilities()[to_c(assignment)];
        if (pc <= 0.0) continue;
        const double joint = abc.probabilities()[idx] / pc;
        const double prod = (ac.probabilities()[to_ac(assignment)] / pc) * (bc.probabilities()[to_bc(assignment)] / pc);
        if (std::abs(joint - prod) > eps) return false;
    }
    return true;
}

bool verify_factorization(const JointTable& t, const Factorization& f, double eps) {
    const JointTable scope = t.marginal(f.scope);
    struct Factor {
        JointTable numerator;
        JointTable denominator;
        Projector to_num;
        Projector to_den;
    };
    std::vector<Factor> factors;
    for (const auto& ht : f.factors) {
        JointTable num = scope.marginal(ht.head | ht.tail);
        JointTable den = scope.marginal(ht.tail);
        Projector pn(scope, num);
        Projector pd(scope, den);
        factors.push_back({std::move(num), std::move(den), pn, pd});
    }
    std::vector<int> assignment;
    for (std::size_t idx = 0; idx < scope.entries(); ++idx) {
        scope.decode(idx, assignment);
        double prod = 1.0;
        for (const auto& fac : factors) {
            const double num = fac.numerator.probabilities()[fac.to_num(assignment)];
            const double den = fac.denominator.probabilities()[fac.to_den(assignment)];
            if (den > 0.0) {
                prod *= num / den;
            } else if (num > 0.0) {
                return false;
            }
        }
        if (std::abs(scope.probabilities()[idx] - prod) > eps) return false;
    }
    return true;
}

}  // namespace mvrcg
