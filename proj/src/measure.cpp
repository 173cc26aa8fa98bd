#include "ultra/measure.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace ultra {

const char* kind_name(MeasureKind k) {
    return k == MeasureKind::MaxMin ? "maxmin" : "maxplus";
}

ExtReal combine(MeasureKind kind, const ExtReal& a, const ExtReal& b) {
    return kind == MeasureKind::MaxMin ? min(a, b) : a + b;
}

ExtReal neutral_weight(MeasureKind kind) {
    return kind == MeasureKind::MaxMin ? ExtReal::pos_inf() : ExtReal(0);
}

Measure Measure::canonicalize(MeasureKind kind, SpacePtr space,
                              std::vector<Atom> raw_atoms) {
    if (raw_atoms.empty())
        throw DomainError("EmptySupport", "a measure needs at least one atom");
    std::map<size_t, ExtReal> merged;
    for (auto& [point, weight] : raw_atoms) {
        if (point >= space->size())
            throw DomainError("UnknownPoint", "atom point index out of range");
        auto [it, inserted] = merged.emplace(point, weight);
        if (!inserted) it->second = max(it->second, weight);
    }
    std::vector<Atom> atoms;
    for (auto& [point, weight] : merged)
        if (!weight.is_neg_inf()) atoms.emplace_back(point, weight);
    if (atoms.empty())
        throw DomainError("EmptySupport", "all atoms have weight -inf");

    ExtReal top = atoms.front().second;
    for (const auto& [point, weight] : atoms) {
        top = max(top, weight);
        if (kind == MeasureKind::MaxPlus && weight > ExtReal(0))
            throw DomainError("WeightOutOfRange",
                              "max-plus weight " + weight.str() + " exceeds 0");
    }
    if (top != neutral_weight(kind))
        throw DomainError("NotNormalized",
                          std::string("max weight must be ") +
                              (kind == MeasureKind::MaxMin ? "+inf" : "0"));
    return Measure(kind, std::move(space), std::move(atoms));
}

Measure Measure::dirac(MeasureKind kind, SpacePtr space, size_t point) {
    if (point >= space->size())
        throw DomainError("UnknownPoint", "dirac point index out of range");
    std::vector<Atom> atoms{{point, neutral_weight(kind)}};
    return Measure(kind, std::move(space), std::move(atoms));
}

Measure Measure::dirac(MeasureKind kind, SpacePtr space, const std::string& label) {
    size_t i = space->index_of(label);
    return dirac(kind, std::move(space), i);
}

ExtReal Measure::weight_at(size_t point) const {
    for (const auto& [p, w] : atoms_)
        if (p == point) return w;
    return ExtReal::neg_inf();
}

bool Measure::operator==(const Measure& o) const {
    return kind_ == o.kind_ && *space_ == *o.space_ && atoms_ == o.atoms_;
}

bool Measure::operator<(const Measure& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    const size_t n = std::min(atoms_.size(), o.atoms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (atoms_[i].first != o.atoms_[i].first)
            return atoms_[i].first < o.atoms_[i].first;
        if (atoms_[i].second != o.atoms_[i].second)
            return atoms_[i].second < o.atoms_[i].second;
    }
    return atoms_.size() < o.atoms_.size();
}

TestFunction TestFunction::of(SpacePtr space, std::vector<Rat> values) {
    if (values.size() != space->size())
        throw DomainError("BadTestFunction",
                          "test function must assign a value to every point");
    return TestFunction{std::move(space), std::move(values)};
}

ExtReal evaluate(const Measure& mu, const TestFunction& phi) {
    require_same_space(mu.space(), phi.space);
    ExtReal result = ExtReal::neg_inf();
    for (const auto& [point, weight] : mu.atoms())
        result = max(result, combine(mu.kind(), weight, ExtReal(phi.values[point])));
    return result;
}

ExtReal set_value(const Measure& mu, const FiniteSubset& a) {
    require_same_space(mu.space(), a.space);
    ExtReal result = ExtReal::neg_inf();
    for (const auto& [point, weight] : mu.atoms())
        if (std::binary_search(a.members.begin(), a.members.end(), point))
            result = max(result, weight);
    return result;
}

FiniteSubset support(const Measure& mu) {
    std::vector<size_t> members;
    for (const auto& [point, weight] : mu.atoms()) members.push_back(point);
    return FiniteSubset::of(mu.space(), std::move(members));
}

Measure pushforward(const PointMap& f, const Measure& mu) {
    require_same_space(f.source, mu.space());
    std::vector<Measure::Atom> atoms;
    for (const auto& [point, weight] : mu.atoms())
        atoms.emplace_back(f(point), weight);
    return Measure::canonicalize(mu.kind(), f.target, std::move(atoms));
}

namespace {

// Classes of the relation d <= t on the index set s, ordered by smallest
// member; an equivalence relation by the strong triangle inequality.
std::vector<std::vector<size_t>> threshold_classes(const Space& X,
                                                   const std::vector<size_t>& s,
                                                   const Rat& t) {
    std::vector<std::vector<size_t>> classes;
    std::vector<bool> placed(s.size(), false);
    for (size_t a = 0; a < s.size(); ++a) {
        if (placed[a]) continue;
        std::vector<size_t> cls{s[a]};
        placed[a] = true;
        for (size_t b = a + 1; b < s.size(); ++b)
            if (!placed[b] && X.dist(s[a], s[b]) <= t) {
                placed[b] = true;
                cls.push_back(s[b]);
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

ExtReal class_signature(const Measure& mu, const std::vector<size_t>& cls) {
    ExtReal sig = ExtReal::neg_inf();
    for (size_t p : cls) sig = max(sig, mu.weight_at(p));
    return sig;
}

}  // namespace

Rat measure_distance(const Measure& mu, const Measure& nu) {
    require_same_space(mu.space(), nu.space());
    if (mu.kind() != nu.kind())
        throw DomainError("MixedKinds", "cannot compare measures of different kinds");
    const Space& X = *mu.space();

    std::vector<size_t> s;
    for (const auto& [p, w] : mu.atoms()) s.push_back(p);
    for (const auto& [p, w] : nu.atoms()) s.push_back(p);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    std::vector<Rat> thresholds{Rat(0)};
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            thresholds.push_back(X.dist(s[a], s[b]));
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                     thresholds.end());

    for (const Rat& t : thresholds) {
        auto classes = threshold_classes(X, s, t);
        bool equal = true;
        for (const auto& cls : classes)
            if (class_signature(mu, cls) != class_signature(nu, cls)) {
                equal = false;
                break;
            }
        if (equal) return t;
    }
    // Unreachable: at the diameter threshold there is one class and both
    // signatures are the neutral weight by normalization.
    throw DomainError("Internal", "threshold scan found no agreement");
}

TestFunction sample_r_constant_function(const SpacePtr& space, const Rat& radius,
                                        uint64_t seed) {
    Partition part = ball_partition(space, radius);
    std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
    std::vector<Rat> block_values;
    for (size_t b = 0; b < part.blocks.size(); ++b) {
        long num = static_cast<long>(rng() % 25) - 12;
        long den = 1 + static_cast<long>(rng() % 4);
        block_values.push_back(Rat(num, den));
    }
    std::vector<Rat> values(space->size());
    for (size_t i = 0; i < space->size(); ++i)
        values[i] = block_values[part.block_of[i]];
    return TestFunction{space, std::move(values)};
}

}  // namespace ultra
