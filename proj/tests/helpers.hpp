#pragma once

#include "ultra/measure.hpp"

namespace ultra::testing {

/// The three-point space with d(a,b)=1, d(a,c)=d(b,c)=2 used by most of the
/// worked examples.
inline SpacePtr abc_space() {
    return Space::validate({"a", "b", "c"},
                           {{Rat(0), Rat(1), Rat(2)},
                            {Rat(1), Rat(0), Rat(2)},
                            {Rat(2), Rat(2), Rat(0)}});
}

inline Measure maxmin(const SpacePtr& space,
                      std::vector<std::pair<std::string, ExtReal>> atoms) {
    std::vector<Measure::Atom> raw;
    for (auto& [label, w] : atoms) raw.emplace_back(space->index_of(label), w);
    return Measure::canonicalize(MeasureKind::MaxMin, space, std::move(raw));
}

inline Measure maxplus(const SpacePtr& space,
                       std::vector<std::pair<std::string, ExtReal>> atoms) {
    std::vector<Measure::Atom> raw;
    for (auto& [label, w] : atoms) raw.emplace_back(space->index_of(label), w);
    return Measure::canonicalize(MeasureKind::MaxPlus, space, std::move(raw));
}

inline TestFunction fn(const SpacePtr& space, std::vector<Rat> values) {
    return TestFunction::of(space, std::move(values));
}

}  // namespace ultra::testing
