#pragma once

#include <random>

#include "ultra/measure.hpp"
#include "ultra/monad.hpp"

namespace ultra {

/// Seeded generators for the law harnesses and property suites. Everything
/// here is deterministic in the rng state.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    uint64_t pick(uint64_t bound) { return rng_() % bound; }

    /// Rational from a small grid: k/q, k in [-12,12], q in {1,2,3,4}.
    Rat rational();
    /// Positive rational from the same grid.
    Rat positive_rational();

    /// Random finite ultrametric space with 1..max_points points, built by
    /// nested random refinement of the trivial partition.
    SpacePtr space(size_t max_points = 6);

    /// Canonical measure with 1..|X| atoms; one atom promoted to the
    /// neutral weight to force normalization.
    Measure measure(MeasureKind kind, const SpacePtr& space);

    MeasureOfMeasures measure_of_measures(MeasureKind kind, const SpacePtr& space,
                                          size_t max_outer = 4, size_t max_inner = 4);

    DeepMeasure deep_measure(MeasureKind kind, const SpacePtr& space,
                             size_t max_outer = 3, size_t max_mid = 3,
                             size_t max_inner = 3);

    TestFunction test_function(const SpacePtr& space);

    FiniteSubset subset(const SpacePtr& space);

    /// Nonexpanding map between the given spaces (rejection sampling with a
    /// constant-map fallback, so it always succeeds).
    PointMap nonexpanding_map(const SpacePtr& source, const SpacePtr& target);

    /// Arbitrary point map, not necessarily nonexpanding.
    PointMap point_map(const SpacePtr& source, const SpacePtr& target);

    /// Fresh sub-seed, for per-trial determinism independent of scheduling.
    uint64_t sub_seed() { return rng_(); }

private:
    ExtReal weight(MeasureKind kind);

    std::mt19937_64 rng_;
};

}  // namespace ultra
