#include "mvrcg/closure.hpp"

#include <stdexcept>

#include "mvrcg/errors.hpp"

namespace mvrcg {

namespace {

struct Ordered {
    VertexSet a;
    VertexSet b;
    VertexSet c;
};

// Membership bitmap over base-4 labelings of the ground set (0 out, 1 in A, 2 in B, 3 in C).
// Both orientations of every triple are stored.
class LabelingSpace {
public:
    explicit LabelingSpace(std::size_t n) : n_(n), spread_(std::size_t{1} << n, 0), present_(std::size_t{1} << (2 * n), 0) {
        for (std::size_t mask = 1; mask < spread_.size(); ++mask) {
            const std::size_t low = mask & (~mask + 1);
            const std::size_t rest = mask & (mask - 1);
            std::size_t v = 0;
            while ((std::size_t{1} << v) != low) ++v;
            spread_[mask] = spread_[rest] + (std::uint64_t{1} << (2 * v));
        }
    }

    VertexSet ground() const { return VertexSet::full(n_); }

    bool has(VertexSet a, VertexSet b, VertexSet c) const {
        if (a.empty() || b.empty()) return false;
        return present_[index(a, b, c)] != 0;
    }

    // Returns true if the unordered triple was new.
    bool add(VertexSet a, VertexSet b, VertexSet c) {
        auto& slot = present_[index(a, b, c)];
        if (slot != 0) return false;
        slot = 1;
        present_[index(b, a, c)] = 1;
        return true;
    }

private:
    std::size_t index(VertexSet a, VertexSet b, VertexSet c) const {
        return spread_[a.bits()] + 2 * spread_[b.bits()] + 3 * spread_[c.bits()];
    }

    std::size_t n_;
    std::vector<std::uint64_t> spread_;
    std::vector<std::uint8_t> present_;
};

// Enumerates the single-step consequences of the ordered triple t under `ax`. The callback
// receives (axiom, second premise or nullptr, conclusion) and returns false to stop early.
template <typename Emit>
bool for_each_consequence(const Ordered& t, const AxiomSet& ax, const LabelingSpace& space, Emit&& emit) {
    const VertexSet a = t.a;
    const VertexSet b = t.b;
    const VertexSet c = t.c;
    const VertexSet out = space.ground() - a - b - c;
    bool go = true;

    auto proper_subsets = [&](VertexSet s, auto&& fn) {
        for_each_nonempty_subset(s, [&](VertexSet sub) {
            if (go && sub != s) fn(sub);
        });
    };
    auto nonempty_subsets = [&](VertexSet s, auto&& fn) {
        for_each_nonempty_subset(s, [&](VertexSet sub) {
            if (go) fn(sub);
        });
    };

    if (ax.symmetry && go) go = emit(Axiom::Symmetry, nullptr, Ordered{b, a, c});
    if (ax.decomposition) {
        proper_subsets(b, [&](VertexSet sub) { go = emit(Axiom::Decomposition, nullptr, Ordered{a, sub, c}); });
    }
    if (ax.weak_union) {
        proper_subsets(b, [&](VertexSet d) { go = emit(Axiom::WeakUnion, nullptr, Ordered{a, b - d, c | d}); });
    }
    if (ax.contraction) {
        // t = A ⫫ B | DC with partner A ⫫ D | C.
        nonempty_subsets(c, [&](VertexSet d) {
            if (space.has(a, d, c - d)) {
                const Ordered partner{a, d, c - d};
                go = emit(Axiom::Contraction, &partner, Ordered{a, b | d, c - d});
            }
        });
        // t = A ⫫ D | C with partner A ⫫ B' | C ∪ D.
        nonempty_subsets(out, [&](VertexSet other) {
            if (space.has(a, other, c | b)) {
                const Ordered partner{a, other, c | b};
                go = emit(Axiom::Contraction, &partner, Ordered{a, other | b, c});
            }
        });
        // Reverse direction: A ⫫ BD | C gives A ⫫ B | DC and A ⫫ D | C.
        proper_subsets(b, [&](VertexSet d) {
            go = emit(Axiom::Contraction, nullptr, Ordered{a, b - d, c | d});
            if (go) go = emit(Axiom::Contraction, nullptr, Ordered{a, d, c});
        });
    }
    if (ax.intersection) {
        // t = A ⫫ B | DC with partner A ⫫ D | BC; the rule is symmetric in B and D.
        nonempty_subsets(c, [&](VertexSet d) {
            if (space.has(a, d, (c - d) | b)) {
                const Ordered partner{a, d, (c - d) | b};
                go = emit(Axiom::Intersection, &partner, Ordered{a, b | d, c - d});
            }
        });
    }
    if (ax.composition) {
        nonempty_subsets(out, [&](VertexSet d) {
            if (space.has(a, d, c)) {
                const Ordered partner{a, d, c};
                go = emit(Axiom::Composition, &partner, Ordered{a, b | d, c});
            }
        });
    }
    return go;
}

void check_cap(const IndependenceModel& m, std::size_t cap) {
    if (m.ground_size() > cap) throw CapExceeded("closure ground set", m.ground_size(), cap);
}

LabelingSpace load(const IndependenceModel& m) {
    LabelingSpace space(m.ground_size());
    for (const auto& t : m) space.add(t.a(), t.b(), t.c());
    return space;
}

}  // namespace

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Symmetry:
            return "symmetry";
        case Axiom::Decomposition:
            return "decomposition";
        case Axiom::WeakUnion:
            return "weak union";
        case Axiom::Contraction:
            return "contraction";
        case Axiom::Intersection:
            return "intersection";
        case Axiom::Composition:
            return "composition";
    }
    return "?";
}

AxiomSet AxiomSet::parse(const std::string& name) {
    if (name == "sg") return semi_graphoid();
    if (name == "g") return graphoid();
    if (name == "csg") return compositional_semi_graphoid();
    if (name == "cg") return compositional_graphoid();
    throw std::invalid_argument("unknown axiom set '" + name + "' (expected sg, g, csg or cg)");
}

std::string AxiomViolation::format(const MixedGraph* g) const {
    std::string out = axiom_name(axiom) + ": ";
    for (std::size_t i = 0; i < premises.size(); ++i) out += (i ? " and " : "") + premises[i].format(g);
    return out + " => " + conclusion.format(g);
}

IndependenceModel close(const IndependenceModel& m, const AxiomSet& ax, std::size_t cap) {
    check_cap(m, cap);
    LabelingSpace space = load(m);
    IndependenceModel result = m;
    std::vector<Ordered> work;
    for (const auto& t : m) {
        work.push_back({t.a(), t.b(), t.c()});
        work.push_back({t.b(), t.a(), t.c()});
    }
    while (!work.empty()) {
        const Ordered t = work.back();
        work.pop_back();
        for_each_consequence(t, ax, space, [&](Axiom, const Ordered*, const Ordered& r) {
            if (space.add(r.a, r.b, r.c)) {
                result.insert(r.a, r.b, r.c);
                work.push_back(r);
                work.push_back({r.b, r.a, r.c});
            }
            return true;
        });
    }
    return result;
}

SatisfiesResult satisfies(const IndependenceModel& m, const AxiomSet& ax, std::size_t cap) {
    check_cap(m, cap);
    const LabelingSpace space = load(m);
    SatisfiesResult result;
    for (const auto& t : m) {
        for (const Ordered& o : {Ordered{t.a(), t.b(), t.c()}, Ordered{t.b(), t.a(), t.c()}}) {
            for_each_consequence(o, ax, space, [&](Axiom axiom, const Ordered* partner, const Ordered& r) {
                if (space.has(r.a, r.b, r.c)) return true;
                std::vector<IndependenceTriple> premises{IndependenceTriple::make(o.a, o.b, o.c)};
                if (partner != nullptr) premises.push_back(IndependenceTriple::make(partner->a, partner->b, partner->c));
                result.satisfied = false;
                result.violation = AxiomViolation{axiom, std::move(premises), IndependenceTriple::make(r.a, r.b, r.c)};
                return false;
            });
            if (!result.satisfied) return result;
        }
    }
    return result;
}

bool equivalent_under(const IndependenceModel& m1, const IndependenceModel& m2, const AxiomSet& ax, std::size_t cap) {
    if (m1.ground_size() != m2.ground_size()) throw std::invalid_argument("models have different ground sets");
    return close(m1, ax, cap) == close(m2, ax, cap);
}

}  // namespace mvrcg
