#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <random>
#include <vector>

#include "ultra/measure.hpp"

namespace ultra::oracle {

/// Brute-force functional equality: evaluates both measures on the finite
/// family of all functions (supp(mu) u supp(nu) u {off-support}) -> V,
/// where V is every weight of both measures with +inf replaced by
/// 1 + max finite value, plus one value below the minimum. Two canonical
/// measures are equal iff they agree on all of these.
inline bool functionally_equal(const Measure& mu, const Measure& nu) {
    const SpacePtr& space = mu.space();

    std::vector<size_t> s;
    for (const auto& [p, w] : mu.atoms()) s.push_back(p);
    for (const auto& [p, w] : nu.atoms()) s.push_back(p);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    std::vector<Rat> values;
    Rat max_finite = 0, min_finite = 0;
    bool any_finite = false;
    auto note = [&](const ExtReal& w) {
        if (!w.is_finite()) return;
        if (!any_finite || w.finite() > max_finite) max_finite = w.finite();
        if (!any_finite || w.finite() < min_finite) min_finite = w.finite();
        any_finite = true;
        values.push_back(w.finite());
    };
    for (const auto& [p, w] : mu.atoms()) note(w);
    for (const auto& [p, w] : nu.atoms()) note(w);
    values.push_back(max_finite + 1);  // stands in for +inf
    values.push_back(min_finite - 1);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // Odometer over assignments S u {off-support} -> V.
    const size_t slots = s.size() + 1;
    std::vector<size_t> choice(slots, 0);
    for (;;) {
        std::vector<Rat> phi(space->size(), values[choice[s.size()]]);
        for (size_t i = 0; i < s.size(); ++i) phi[s[i]] = values[choice[i]];
        TestFunction f = TestFunction::of(space, std::move(phi));
        if (evaluate(mu, f) != evaluate(nu, f)) return false;
        size_t k = slots;
        bool done = true;
        while (k-- > 0) {
            if (++choice[k] < values.size()) {
                done = false;
                break;
            }
            choice[k] = 0;
        }
        if (done) return true;
    }
}

/// Probabilistic distance oracle: scans the candidate thresholds (realized
/// joint-support distances and 0) in ascending order and returns the first
/// one at which the measures agree on `samples` random functions constant
/// on the corresponding open balls.
inline Rat sampled_distance(const Measure& mu, const Measure& nu, size_t samples,
                            uint64_t seed) {
    const SpacePtr& space = mu.space();
    std::vector<size_t> s;
    for (const auto& [p, w] : mu.atoms()) s.push_back(p);
    for (const auto& [p, w] : nu.atoms()) s.push_back(p);

    std::vector<Rat> thresholds{Rat(0)};
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            thresholds.push_back(space->dist(s[a], s[b]));
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                     thresholds.end());

    std::mt19937_64 rng(seed);
    for (size_t k = 0; k < thresholds.size(); ++k) {
        // Any radius in (t_k, t_{k+1}] yields open balls equal to the
        // d <= t_k classes; no realized distance lies strictly between.
        Rat radius = k + 1 < thresholds.size() ? thresholds[k + 1]
                                               : thresholds[k] + 1;
        bool agree = true;
        for (size_t i = 0; i < samples && agree; ++i) {
            TestFunction phi = sample_r_constant_function(space, radius, rng());
            agree = evaluate(mu, phi) == evaluate(nu, phi);
        }
        if (agree) return thresholds[k];
    }
    return thresholds.back() + 1;  // not reached for normalized measures
}

/// Independent bottleneck assignment: minimizes the max coordinate distance
/// over all n! bijections, coded directly on index vectors.
inline Rat bottleneck_assignment(const Space& space, const std::vector<size_t>& x,
                                 const std::vector<size_t>& y) {
    std::vector<size_t> perm(x.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    bool first = true;
    Rat best = 0;
    do {
        Rat worst = 0;
        for (size_t i = 0; i < x.size(); ++i)
            worst = std::max(worst, space.dist(x[i], y[perm[i]]));
        if (first || worst < best) best = worst;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace ultra::oracle
