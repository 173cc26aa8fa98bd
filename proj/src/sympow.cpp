#include "ultra/sympow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ultra/sampler.hpp"

namespace ultra {

namespace {

Perm identity_perm(size_t n) {
    Perm e(n);
    std::iota(e.begin(), e.end(), 0);
    return e;
}

Perm compose_perm(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

// h_sigma(x)_i = x_{sigma(i)}.
std::vector<size_t> apply_perm(const Perm& sigma, const std::vector<size_t>& tuple) {
    std::vector<size_t> out(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i) out[i] = tuple[sigma[i]];
    return out;
}

void validate_perm(size_t n, const Perm& p) {
    if (p.size() != n)
        throw DomainError("InvalidPermutation", "permutation has wrong arity");
    std::vector<bool> seen(n, false);
    for (size_t v : p) {
        if (v >= n || seen[v])
            throw DomainError("InvalidPermutation",
                              "not a permutation of {1.." + std::to_string(n) + "}");
        seen[v] = true;
    }
}

}  // namespace

PermutationGroup group_closure(size_t n, const std::vector<Perm>& generators,
                               size_t budget) {
    for (const auto& g : generators) validate_perm(n, g);
    std::set<Perm> closed{identity_perm(n)};
    std::vector<Perm> frontier{identity_perm(n)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : generators) {
                Perm q = compose_perm(g, p);
                if (closed.insert(q).second) {
                    if (closed.size() > budget)
                        throw DomainError("GroupBudgetExceeded",
                                          "group order exceeds " +
                                              std::to_string(budget));
                    next.push_back(std::move(q));
                }
            }
        frontier = std::move(next);
    }
    // Finite closure under composition of a generating set containing the
    // identity is automatically closed under inverse.
    return PermutationGroup{n, std::vector<Perm>(closed.begin(), closed.end())};
}

PermutationGroup symmetric_group(size_t n) {
    Perm p = identity_perm(n);
    std::vector<Perm> elems;
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return PermutationGroup{n, std::move(elems)};
}

std::vector<size_t> orbit_canonical(const PermutationGroup& g,
                                    const std::vector<size_t>& tuple) {
    if (tuple.size() != g.n)
        throw DomainError("ArityMismatch", "tuple arity differs from group arity");
    std::vector<size_t> best = tuple;
    for (const auto& sigma : g.elements)
        best = std::min(best, apply_perm(sigma, tuple));
    return best;
}

Rat sympow_distance(const SpacePtr& space, const PermutationGroup& g,
                    const std::vector<std::string>& x,
                    const std::vector<std::string>& y) {
    if (x.size() != g.n || y.size() != g.n)
        throw DomainError("ArityMismatch", "tuple arity differs from group arity");
    std::vector<size_t> xi, yi;
    for (const auto& l : x) xi.push_back(space->index_of(l));
    for (const auto& l : y) yi.push_back(space->index_of(l));

    bool first = true;
    Rat best = 0;
    for (const auto& sigma : g.elements) {
        Rat worst = 0;
        for (size_t i = 0; i < g.n; ++i)
            worst = std::max(worst, space->dist(xi[i], yi[sigma[i]]));
        if (first || worst < best) best = worst;
        first = false;
    }
    return best;
}

size_t SymPowSpace::orbit_index(const std::vector<size_t>& tuple,
                                const PermutationGroup& g) const {
    std::vector<size_t> rep = orbit_canonical(g, tuple);
    auto it = std::lower_bound(representatives.begin(), representatives.end(), rep);
    if (it == representatives.end() || *it != rep)
        throw DomainError("UnknownPoint", "tuple is not in the symmetric power");
    return static_cast<size_t>(it - representatives.begin());
}

SymPowSpace sympow_space(const SpacePtr& space, const PermutationGroup& g,
                         size_t budget) {
    ProductSpace power = product(std::vector<SpacePtr>(g.n, space), budget);

    // Product tuples are lexicographic, so canonical representatives appear
    // in lex order at their own index.
    std::vector<std::vector<size_t>> reps;
    std::vector<size_t> orbit_of(power.tuples.size());
    std::map<std::vector<size_t>, size_t> rep_index;
    for (size_t t = 0; t < power.tuples.size(); ++t) {
        std::vector<size_t> rep = orbit_canonical(g, power.tuples[t]);
        auto [it, inserted] = rep_index.emplace(rep, reps.size());
        if (inserted) reps.push_back(std::move(rep));
        orbit_of[t] = it->second;
    }

    std::vector<std::string> labels;
    for (const auto& rep : reps) {
        std::string l = "[";
        for (size_t i = 0; i < rep.size(); ++i) {
            if (i) l += ",";
            l += space->label(rep[i]);
        }
        labels.push_back(l + "]");
    }

    const size_t m = reps.size();
    std::vector<std::vector<Rat>> dist(m, std::vector<Rat>(m, Rat(0)));
    auto to_labels = [&](const std::vector<size_t>& rep) {
        std::vector<std::string> ls;
        for (size_t i : rep) ls.push_back(space->label(i));
        return ls;
    };
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            dist[a][b] = dist[b][a] =
                sympow_distance(space, g, to_labels(reps[a]), to_labels(reps[b]));

    SpacePtr orbit_space = Space::validate(std::move(labels), std::move(dist));
    PointMap pi{power.space, orbit_space, std::move(orbit_of)};
    return SymPowSpace{orbit_space, std::move(power), std::move(pi), std::move(reps)};
}

namespace {

Measure tensor_on(const ProductSpace& p, const std::vector<Measure>& factors) {
    const MeasureKind kind = factors.front().kind();
    std::vector<Measure::Atom> atoms;
    std::vector<size_t> choice(factors.size(), 0);
    for (;;) {
        std::vector<size_t> tuple(factors.size());
        ExtReal w = neutral_weight(kind);
        for (size_t k = 0; k < factors.size(); ++k) {
            const auto& [x, wx] = factors[k].atoms()[choice[k]];
            tuple[k] = x;
            w = combine(kind, w, wx);
        }
        atoms.emplace_back(p.index_of_tuple(tuple), w);
        size_t k = factors.size();
        while (k-- > 0) {
            if (++choice[k] < factors[k].atoms().size()) break;
            choice[k] = 0;
            if (k == 0) {
                return Measure::canonicalize(kind, p.space, std::move(atoms));
            }
        }
    }
}

}  // namespace

Measure tensor(const std::vector<Measure>& factors, size_t budget) {
    if (factors.empty())
        throw DomainError("EmptyProduct", "tensor needs at least one factor");
    std::vector<SpacePtr> spaces;
    for (const auto& f : factors) {
        if (f.kind() != factors.front().kind())
            throw DomainError("MixedKinds", "cannot tensor measures of mixed kinds");
        spaces.push_back(f.space());
    }
    return tensor_on(product(spaces, budget), factors);
}

Measure tensor(const Measure& mu, const Measure& nu, size_t budget) {
    return tensor({mu, nu}, budget);
}

Measure theta(const PermutationGroup& g, const SymPowSpace& sp,
              const std::vector<Measure>& measures) {
    if (measures.size() != g.n)
        throw DomainError("ArityMismatch", "theta needs one measure per factor");
    for (const auto& mu : measures) {
        if (mu.kind() != MeasureKind::MaxMin)
            throw DomainError("MixedKinds", "theta is defined for max-min measures");
        require_same_space(mu.space(), sp.power.factors[0]);
    }
    return pushforward(sp.orbit_map, tensor_on(sp.power, measures));
}

LawReport check_kleisli_extension(const PermutationGroup& g, const SpacePtr& space,
                                  size_t trials, uint64_t seed) {
    if (trials < 1)
        throw DomainError("BadTrials", "at least one trial is required");
    const auto kind = MeasureKind::MaxMin;
    SymPowSpace sp = sympow_space(space, g);
    LawReport report;
    LawResult& unit = report.laws["extension_unit"];
    LawResult& mult = report.laws["extension_multiplication"];

    // Condition 1, exhaustively: theta of Diracs is the Dirac at the orbit.
    for (size_t t = 0; t < sp.power.tuples.size(); ++t) {
        std::vector<Measure> diracs;
        for (size_t x : sp.power.tuples[t])
            diracs.push_back(Measure::dirac(kind, space, x));
        Measure lhs = theta(g, sp, diracs);
        Measure rhs = Measure::dirac(kind, sp.space, sp.orbit_map(t));
        unit.record(lhs == rhs, [&] {
            return "tuple " + sp.power.space->label(t);
        });
    }

    // Condition 2 on random tuples of measures-of-measures.
    Sampler sampler(seed);
    for (size_t t = 0; t < trials; ++t) {
        std::vector<MeasureOfMeasures> ms;
        for (size_t k = 0; k < g.n; ++k)
            ms.push_back(sampler.measure_of_measures(kind, space, 3, 3));

        // theta . SP(xi).
        std::vector<Measure> flattened;
        for (const auto& m : ms) flattened.push_back(multiply(m));
        Measure rhs = theta(g, sp, flattened);

        // xi . J(theta) . theta_J: tensor the outer levels, push each atom
        // tuple of inner measures through theta (orbit-invariant, so keying
        // by the theta image is the same as keying by the orbit).
        std::vector<MeasureOfMeasures::Atom> outer;
        std::vector<size_t> choice(g.n, 0);
        bool done = false;
        while (!done) {
            std::vector<Measure> inner;
            ExtReal w = neutral_weight(kind);
            for (size_t k = 0; k < g.n; ++k) {
                const auto& [mu, wk] = ms[k].atoms()[choice[k]];
                inner.push_back(mu);
                w = combine(kind, w, wk);
            }
            outer.emplace_back(theta(g, sp, inner), w);
            size_t k = g.n;
            done = true;
            while (k-- > 0) {
                if (++choice[k] < ms[k].atoms().size()) {
                    done = false;
                    break;
                }
                choice[k] = 0;
            }
        }
        Measure lhs = multiply(
            MeasureOfMeasures::canonicalize(kind, sp.space, std::move(outer)));

        mult.record(lhs == rhs, [&] { return "trial " + std::to_string(t); });
    }
    return report;
}

}  // namespace ultra
