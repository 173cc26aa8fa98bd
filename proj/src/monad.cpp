#include "ultra/monad.hpp"

#include <sstream>

#include "ultra/sampler.hpp"

namespace ultra {

namespace {

// Shared canonicalization for outer atom lists keyed by canonical equality:
// merge duplicates by max, drop -inf, enforce the kind's normalization.
template <class Key>
std::vector<std::pair<Key, ExtReal>> canonical_outer(
    MeasureKind kind, std::vector<std::pair<Key, ExtReal>> raw) {
    if (raw.empty())
        throw DomainError("EmptySupport", "a measure needs at least one atom");
    std::map<Key, ExtReal> merged;
    for (auto& [key, weight] : raw) {
        auto [it, inserted] = merged.emplace(std::move(key), weight);
        if (!inserted) it->second = max(it->second, weight);
    }
    std::vector<std::pair<Key, ExtReal>> atoms;
    for (auto& [key, weight] : merged)
        if (!weight.is_neg_inf()) atoms.emplace_back(key, weight);
    if (atoms.empty())
        throw DomainError("EmptySupport", "all outer atoms have weight -inf");
    ExtReal top = atoms.front().second;
    for (const auto& [key, weight] : atoms) {
        top = max(top, weight);
        if (kind == MeasureKind::MaxPlus && weight > ExtReal(0))
            throw DomainError("WeightOutOfRange",
                              "max-plus weight " + weight.str() + " exceeds 0");
    }
    if (top != neutral_weight(kind))
        throw DomainError("NotNormalized",
                          std::string("max outer weight must be ") +
                              (kind == MeasureKind::MaxMin ? "+inf" : "0"));
    return atoms;
}

std::string measure_str(const Measure& mu) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [p, w] : mu.atoms()) {
        if (!first) out << ", ";
        first = false;
        out << mu.space()->label(p) << ":" << w.str();
    }
    out << "}";
    return out.str();
}

}  // namespace

MeasureOfMeasures MeasureOfMeasures::canonicalize(MeasureKind kind,
                                                  SpacePtr base_space,
                                                  std::vector<Atom> raw_atoms) {
    for (const auto& [mu, weight] : raw_atoms) {
        if (mu.kind() != kind)
            throw DomainError("MixedKinds", "inner measure kind differs from outer");
        require_same_space(mu.space(), base_space);
    }
    auto atoms = canonical_outer<Measure>(kind, std::move(raw_atoms));
    return MeasureOfMeasures(kind, std::move(base_space), std::move(atoms));
}

MeasureOfMeasures MeasureOfMeasures::dirac(Measure mu) {
    MeasureKind kind = mu.kind();
    SpacePtr base = mu.space();
    std::vector<Atom> atoms{{std::move(mu), neutral_weight(kind)}};
    return MeasureOfMeasures(kind, std::move(base), std::move(atoms));
}

bool MeasureOfMeasures::operator==(const MeasureOfMeasures& o) const {
    return kind_ == o.kind_ && *base_space_ == *o.base_space_ && atoms_ == o.atoms_;
}

bool MeasureOfMeasures::operator<(const MeasureOfMeasures& o) const {
    const size_t n = std::min(atoms_.size(), o.atoms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (atoms_[i].first < o.atoms_[i].first) return true;
        if (o.atoms_[i].first < atoms_[i].first) return false;
        if (atoms_[i].second != o.atoms_[i].second)
            return atoms_[i].second < o.atoms_[i].second;
    }
    return atoms_.size() < o.atoms_.size();
}

DeepMeasure DeepMeasure::canonicalize(MeasureKind kind, SpacePtr base_space,
                                      std::vector<Atom> raw_atoms) {
    for (const auto& [m, weight] : raw_atoms) {
        if (m.kind() != kind)
            throw DomainError("MixedKinds", "nested measure kind differs from outer");
        require_same_space(m.base_space(), base_space);
    }
    auto atoms = canonical_outer<MeasureOfMeasures>(kind, std::move(raw_atoms));
    return DeepMeasure(kind, std::move(base_space), std::move(atoms));
}

Measure multiply(const MeasureOfMeasures& m) {
    std::vector<Measure::Atom> atoms;
    for (const auto& [mu, outer] : m.atoms())
        for (const auto& [x, inner] : mu.atoms())
            atoms.emplace_back(x, combine(m.kind(), outer, inner));
    return Measure::canonicalize(m.kind(), m.base_space(), std::move(atoms));
}

MeasureOfMeasures flatten_outer(const DeepMeasure& m) {
    std::vector<MeasureOfMeasures::Atom> atoms;
    for (const auto& [mid, outer] : m.atoms())
        for (const auto& [mu, inner] : mid.atoms())
            atoms.emplace_back(mu, combine(m.kind(), outer, inner));
    return MeasureOfMeasures::canonicalize(m.kind(), m.base_space(), std::move(atoms));
}

MeasureOfMeasures map_multiply(const DeepMeasure& m) {
    std::vector<MeasureOfMeasures::Atom> atoms;
    for (const auto& [mid, outer] : m.atoms())
        atoms.emplace_back(multiply(mid), outer);
    return MeasureOfMeasures::canonicalize(m.kind(), m.base_space(), std::move(atoms));
}

std::map<Measure, ExtReal> lift_test_function(const TestFunction& phi,
                                              const std::vector<Measure>& measures) {
    std::map<Measure, ExtReal> lifted;
    for (const auto& mu : measures) {
        require_same_space(mu.space(), phi.space);
        lifted.emplace(mu, evaluate(mu, phi));
    }
    return lifted;
}

MeasureMap MeasureMap::of(SpacePtr source, SpacePtr target, MeasureKind kind,
                          std::vector<Measure> values) {
    if (values.size() != source->size())
        throw DomainError("BadMeasureMap",
                          "measure map must assign a measure to every source point");
    for (const auto& mu : values) {
        if (mu.kind() != kind)
            throw DomainError("MixedKinds", "measure map value of wrong kind");
        require_same_space(mu.space(), target);
    }
    return MeasureMap{std::move(source), std::move(target), kind, std::move(values)};
}

MeasureMap MeasureMap::lift(const PointMap& f, MeasureKind kind) {
    std::vector<Measure> values;
    for (size_t x = 0; x < f.source->size(); ++x)
        values.push_back(Measure::dirac(kind, f.target, f(x)));
    return MeasureMap{f.source, f.target, kind, std::move(values)};
}

MeasureMap kleisli_compose(const MeasureMap& g, const MeasureMap& f) {
    require_same_space(f.target, g.source);
    if (f.kind != g.kind)
        throw DomainError("MixedKinds", "cannot compose measure maps of mixed kinds");
    std::vector<Measure> values;
    for (size_t x = 0; x < f.source->size(); ++x) {
        std::vector<MeasureOfMeasures::Atom> outer;
        for (const auto& [y, weight] : f(x).atoms())
            outer.emplace_back(g(y), weight);
        values.push_back(multiply(
            MeasureOfMeasures::canonicalize(f.kind, g.target, std::move(outer))));
    }
    return MeasureMap{f.source, g.target, f.kind, std::move(values)};
}

OrderBijection OrderBijection::rational_default() {
    auto forward = [](const ExtReal& t) -> ExtReal {
        if (t.is_neg_inf()) return ExtReal::neg_inf();
        if (t > ExtReal(0))
            throw DomainError("WeightOutOfRange",
                              "order bijection domain is [-inf,0], got " + t.str());
        const Rat& v = t.finite();
        if (v == 0) return ExtReal::pos_inf();
        if (v <= -1) return ExtReal(Rat(v + 1));
        return ExtReal(Rat(-1 / v - 1));
    };
    auto inverse = [](const ExtReal& s) -> ExtReal {
        if (s.is_neg_inf()) return ExtReal::neg_inf();
        if (s.is_pos_inf()) return ExtReal(0);
        const Rat& v = s.finite();
        if (v <= 0) return ExtReal(Rat(v - 1));
        return ExtReal(Rat(-1 / (v + 1)));
    };
    return OrderBijection{"default", forward, inverse};
}

OrderBijection OrderBijection::scaled(const Rat& c) {
    if (c <= 0)
        throw DomainError("BadScale", "order bijection scale must be positive");
    OrderBijection base = rational_default();
    auto forward = [base, c](const ExtReal& t) -> ExtReal {
        if (!t.is_finite()) return base.forward(t);
        return base.forward(ExtReal(Rat(c * t.finite())));
    };
    auto inverse = [base, c](const ExtReal& s) -> ExtReal {
        ExtReal t = base.inverse(s);
        if (!t.is_finite()) return t;
        return ExtReal(Rat(t.finite() / c));
    };
    return OrderBijection{"scaled(" + rational_str(c) + ")", forward, inverse};
}

Measure convert(const Measure& mu, const OrderBijection& alpha) {
    const bool to_maxmin = mu.kind() == MeasureKind::MaxPlus;
    const auto& map = to_maxmin ? alpha.forward : alpha.inverse;
    std::vector<Measure::Atom> atoms;
    for (const auto& [x, w] : mu.atoms()) atoms.emplace_back(x, map(w));
    return Measure::canonicalize(
        to_maxmin ? MeasureKind::MaxMin : MeasureKind::MaxPlus, mu.space(),
        std::move(atoms));
}

MeasureOfMeasures convert(const MeasureOfMeasures& m, const OrderBijection& alpha) {
    const bool to_maxmin = m.kind() == MeasureKind::MaxPlus;
    const auto& map = to_maxmin ? alpha.forward : alpha.inverse;
    std::vector<MeasureOfMeasures::Atom> atoms;
    for (const auto& [mu, w] : m.atoms()) atoms.emplace_back(convert(mu, alpha), map(w));
    return MeasureOfMeasures::canonicalize(
        to_maxmin ? MeasureKind::MaxMin : MeasureKind::MaxPlus, m.base_space(),
        std::move(atoms));
}

bool support_morphism_check(const MeasureOfMeasures& m) {
    std::vector<size_t> expected;
    for (const auto& [mu, w] : m.atoms())
        for (const auto& [x, v] : mu.atoms()) expected.push_back(x);
    FiniteSubset lhs = support(multiply(m));
    if (!(lhs == FiniteSubset::of(m.base_space(), std::move(expected)))) return false;
    for (size_t x = 0; x < m.base_space()->size(); ++x) {
        FiniteSubset s = support(Measure::dirac(m.kind(), m.base_space(), x));
        if (s.members != std::vector<size_t>{x}) return false;
    }
    return true;
}

NonIsoWitness non_isomorphism_witness(const OrderBijection& alpha) {
    // Discrete 3-point space; the metric is irrelevant to the algebra.
    SpacePtr X = Space::validate({"a", "b", "c"},
                                 {{Rat(0), Rat(1), Rat(1)},
                                  {Rat(1), Rat(0), Rat(1)},
                                  {Rat(1), Rat(1), Rat(0)}});
    const auto mp = MeasureKind::MaxPlus;
    Measure mu = Measure::canonicalize(
        mp, X, {{X->index_of("a"), ExtReal(-2)}, {X->index_of("b"), ExtReal(0)}});
    Measure nu = Measure::canonicalize(
        mp, X, {{X->index_of("b"), ExtReal(-3)}, {X->index_of("c"), ExtReal(0)}});
    MeasureOfMeasures M = MeasureOfMeasures::canonicalize(
        mp, X, {{mu, ExtReal(-1)}, {nu, ExtReal(0)}});

    Measure side1 = convert(multiply(M), alpha);
    Measure side2 = multiply(convert(M, alpha));
    return NonIsoWitness{side1, side2, measure_distance(side1, side2)};
}

void LawResult::record(bool ok, const std::function<std::string()>& describe) {
    ++trials;
    if (!ok) {
        ++failures;
        if (!first_counterexample) first_counterexample = describe();
    }
}

bool LawReport::all_passed() const {
    for (const auto& [name, result] : laws)
        if (result.failures != 0) return false;
    return true;
}

LawReport check_monad_laws(MeasureKind kind, const SpacePtr& space, size_t trials,
                           uint64_t seed) {
    if (trials < 1)
        throw DomainError("BadTrials", "at least one trial is required");
    LawReport report;
    LawResult& left = report.laws["left_unit"];
    LawResult& right = report.laws["right_unit"];
    LawResult& assoc = report.laws["associativity"];
    Sampler sampler(seed);

    for (size_t t = 0; t < trials; ++t) {
        Measure mu = sampler.measure(kind, space);

        // xi . J(delta): atoms become outer Diracs with the same weights.
        std::vector<MeasureOfMeasures::Atom> lifted;
        for (const auto& [x, w] : mu.atoms())
            lifted.emplace_back(Measure::dirac(kind, space, x), w);
        Measure left_result = multiply(
            MeasureOfMeasures::canonicalize(kind, space, std::move(lifted)));
        left.record(left_result == mu,
                    [&] { return "mu = " + measure_str(mu); });

        // xi . delta_J.
        Measure right_result = multiply(MeasureOfMeasures::dirac(mu));
        right.record(right_result == mu,
                     [&] { return "mu = " + measure_str(mu); });

        DeepMeasure deep = sampler.deep_measure(kind, space);
        Measure via_outer = multiply(flatten_outer(deep));
        Measure via_inner = multiply(map_multiply(deep));
        assoc.record(via_inner == via_outer, [&] {
            return "xi.J(xi) = " + measure_str(via_inner) +
                   " vs xi.xi_J = " + measure_str(via_outer);
        });
    }
    return report;
}

}  // namespace ultra
