#include "ultra/sampler.hpp"

#include <algorithm>
#include <numeric>

namespace ultra {

Rat Sampler::rational() {
    long num = static_cast<long>(pick(25)) - 12;
    long den = 1 + static_cast<long>(pick(4));
    return Rat(num, den);
}

Rat Sampler::positive_rational() {
    long num = 1 + static_cast<long>(pick(12));
    long den = 1 + static_cast<long>(pick(4));
    return Rat(num, den);
}

namespace {

// Nested random refinement: points in different groups at this level are at
// distance `level`, groups recurse with strictly smaller levels.
void fill_hierarchy(std::vector<std::vector<Rat>>& dist, std::vector<size_t> idx,
                    Rat level, Sampler& sampler) {
    if (idx.size() < 2) return;
    // At least two nonempty groups: first two points are split apart.
    std::vector<size_t> group_of(idx.size());
    group_of[0] = 0;
    group_of[1] = 1;
    size_t groups = 2 + sampler.pick(idx.size() - 1);
    for (size_t i = 2; i < idx.size(); ++i) group_of[i] = sampler.pick(groups);
    std::vector<std::vector<size_t>> parts(groups);
    for (size_t i = 0; i < idx.size(); ++i) parts[group_of[i]].push_back(idx[i]);

    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (group_of[a] != group_of[b])
                dist[idx[a]][idx[b]] = dist[idx[b]][idx[a]] = level;

    Rat next = level * Rat(1, 2 + static_cast<long>(sampler.pick(3)));
    for (auto& part : parts) fill_hierarchy(dist, std::move(part), next, sampler);
}

}  // namespace

SpacePtr Sampler::space(size_t max_points) {
    size_t n = 1 + pick(max_points);
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, Rat(0)));
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rat top = positive_rational() + 1;
    fill_hierarchy(dist, idx, top, *this);
    return Space::validate(std::move(labels), std::move(dist));
}

ExtReal Sampler::weight(MeasureKind kind) {
    if (pick(8) == 0) return ExtReal::neg_inf();
    if (kind == MeasureKind::MaxPlus) {
        if (pick(4) == 0) return ExtReal(0);
        return ExtReal(Rat(-positive_rational()));
    }
    if (pick(8) == 0) return ExtReal::pos_inf();
    return ExtReal(rational());
}

Measure Sampler::measure(MeasureKind kind, const SpacePtr& space) {
    size_t m = 1 + pick(space->size());
    std::vector<size_t> idx(space->size());
    std::iota(idx.begin(), idx.end(), 0);
    for (size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[pick(i)]);
    std::vector<Measure::Atom> atoms;
    for (size_t i = 0; i < m; ++i) atoms.emplace_back(idx[i], weight(kind));
    atoms[pick(m)].second = neutral_weight(kind);
    return Measure::canonicalize(kind, space, std::move(atoms));
}

MeasureOfMeasures Sampler::measure_of_measures(MeasureKind kind,
                                               const SpacePtr& space,
                                               size_t max_outer, size_t max_inner) {
    size_t m = 1 + pick(max_outer);
    std::vector<MeasureOfMeasures::Atom> atoms;
    for (size_t i = 0; i < m; ++i)
        atoms.emplace_back(measure(kind, space), weight(kind));
    atoms[pick(m)].second = neutral_weight(kind);
    (void)max_inner;  // inner atom count is bounded by |space| in measure()
    return MeasureOfMeasures::canonicalize(kind, space, std::move(atoms));
}

DeepMeasure Sampler::deep_measure(MeasureKind kind, const SpacePtr& space,
                                  size_t max_outer, size_t max_mid,
                                  size_t max_inner) {
    size_t m = 1 + pick(max_outer);
    std::vector<DeepMeasure::Atom> atoms;
    for (size_t i = 0; i < m; ++i)
        atoms.emplace_back(measure_of_measures(kind, space, max_mid, max_inner),
                           weight(kind));
    atoms[pick(m)].second = neutral_weight(kind);
    return DeepMeasure::canonicalize(kind, space, std::move(atoms));
}

TestFunction Sampler::test_function(const SpacePtr& space) {
    std::vector<Rat> values;
    for (size_t i = 0; i < space->size(); ++i) values.push_back(rational());
    return TestFunction{space, std::move(values)};
}

FiniteSubset Sampler::subset(const SpacePtr& space) {
    std::vector<size_t> members;
    for (size_t i = 0; i < space->size(); ++i)
        if (pick(2) == 0) members.push_back(i);
    if (members.empty()) members.push_back(pick(space->size()));
    return FiniteSubset::of(space, std::move(members));
}

PointMap Sampler::point_map(const SpacePtr& source, const SpacePtr& target) {
    std::vector<size_t> assign;
    for (size_t i = 0; i < source->size(); ++i) assign.push_back(pick(target->size()));
    return PointMap{source, target, std::move(assign)};
}

PointMap Sampler::nonexpanding_map(const SpacePtr& source, const SpacePtr& target) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        PointMap f = point_map(source, target);
        if (check_nonexpanding(f)) return f;
    }
    // Constant maps are always nonexpanding.
    std::vector<size_t> assign(source->size(), pick(target->size()));
    return PointMap{source, target, std::move(assign)};
}

}  // namespace ultra
