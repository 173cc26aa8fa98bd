#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ultra/space.hpp"

namespace ultra {

enum class MeasureKind { MaxMin, MaxPlus };

const char* kind_name(MeasureKind k);

/// Weight combination used when flattening and tensoring: min for max-min
/// measures, addition for max-plus measures.
ExtReal combine(MeasureKind kind, const ExtReal& a, const ExtReal& b);

/// The neutral weight: +inf (max-min) or 0 (max-plus); a Dirac atom's weight.
ExtReal neutral_weight(MeasureKind kind);

/// A measure of finite support in canonical form: distinct atom points in
/// space order, no -inf weights, and the kind's normalization (some atom at
/// +inf for max-min, all weights <= 0 with some atom at 0 for max-plus).
/// Two representations define the same functional iff their canonical forms
/// coincide, so operator== is functional equality.
class Measure {
public:
    using Atom = std::pair<size_t, ExtReal>;  // point index, weight

    /// Merges duplicate points by max, drops -inf atoms, then checks the
    /// normalization. Errors: EmptySupport, NotNormalized, WeightOutOfRange.
    static Measure canonicalize(MeasureKind kind, SpacePtr space,
                                std::vector<Atom> raw_atoms);

    static Measure dirac(MeasureKind kind, SpacePtr space, size_t point);
    static Measure dirac(MeasureKind kind, SpacePtr space, const std::string& label);

    MeasureKind kind() const { return kind_; }
    const SpacePtr& space() const { return space_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Weight at a point, -inf when the point carries no atom.
    ExtReal weight_at(size_t point) const;

    bool operator==(const Measure& o) const;
    /// Arbitrary total order on canonical measures (used as association key).
    bool operator<(const Measure& o) const;

private:
    Measure(MeasureKind kind, SpacePtr space, std::vector<Atom> atoms)
        : kind_(kind), space_(std::move(space)), atoms_(std::move(atoms)) {}

    MeasureKind kind_;
    SpacePtr space_;
    std::vector<Atom> atoms_;
};

/// A total finite-valued function on the points of a space.
struct TestFunction {
    SpacePtr space;
    std::vector<Rat> values;  // by point index

    static TestFunction of(SpacePtr space, std::vector<Rat> values);
};

/// mu(phi): max over atoms of min(weight, phi(x)) resp. weight + phi(x).
ExtReal evaluate(const Measure& mu, const TestFunction& phi);

/// The set-function view mu(A): max atom weight inside A, -inf when none.
ExtReal set_value(const Measure& mu, const FiniteSubset& a);

FiniteSubset support(const Measure& mu);

/// Atoms moved along f, collisions merged by max; kind preserved.
Measure pushforward(const PointMap& f, const Measure& mu);

/// The ultrametric between measures: the least threshold t (among realized
/// pairwise support distances and 0) at which the two measures induce equal
/// block-max signatures on the d <= t classes of their joint support.
/// Equals inf{r > 0 : the q_r-pushforwards agree}.
Rat measure_distance(const Measure& mu, const Measure& nu);

/// A function constant on every open r-ball, with block values drawn from a
/// seeded generator; deterministic in (space, r, seed).
TestFunction sample_r_constant_function(const SpacePtr& space, const Rat& radius,
                                        uint64_t seed);

}  // namespace ultra
