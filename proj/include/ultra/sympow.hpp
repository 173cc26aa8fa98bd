#pragma once

#include "ultra/monad.hpp"

namespace ultra {

/// A permutation of {0..n-1} as an image vector.
using Perm = std::vector<size_t>;

/// A subgroup of S_n materialized from generators: contains the identity,
/// closed under composition and inverse.
struct PermutationGroup {
    size_t n;
    std::vector<Perm> elements;  // sorted, identity first
};

/// Breadth-first closure of the generators; deterministic element order.
/// Errors: InvalidPermutation, GroupBudgetExceeded (cap on |G|).
PermutationGroup group_closure(size_t n, const std::vector<Perm>& generators,
                               size_t budget = 720);

/// The full symmetric group S_n (n <= 7).
PermutationGroup symmetric_group(size_t n);

/// Lexicographically least tuple in the G-orbit of `tuple`; orbit-point
/// equality is equality of canonical representatives.
std::vector<size_t> orbit_canonical(const PermutationGroup& g,
                                    const std::vector<size_t>& tuple);

/// min over sigma in G of max_i d(x_i, y_{sigma(i)}).
Rat sympow_distance(const SpacePtr& space, const PermutationGroup& g,
                    const std::vector<std::string>& x,
                    const std::vector<std::string>& y);

/// The orbit space of X^n under G with the min-over-G bottleneck metric,
/// together with the n-fold product and the orbit map pi_G from it.
struct SymPowSpace {
    SpacePtr space;            // one point per orbit, labeled "[a,b,...]"
    ProductSpace power;        // the underlying n-fold product
    PointMap orbit_map;        // pi_G: product -> orbit space
    std::vector<std::vector<size_t>> representatives;  // orbit -> canonical tuple

    size_t orbit_index(const std::vector<size_t>& tuple, const PermutationGroup& g) const;
};

SymPowSpace sympow_space(const SpacePtr& space, const PermutationGroup& g,
                         size_t budget = 10000);

/// Tensor product over the flat product of the factors' spaces: atom weights
/// combine by min (max-min) or addition (max-plus).
Measure tensor(const std::vector<Measure>& factors, size_t budget = 10000);
Measure tensor(const Measure& mu, const Measure& nu, size_t budget = 10000);

/// The Kleisli-extension map theta: the n-fold tensor pushed forward along
/// pi_G. Independent of the orbit representative. Max-min measures only.
Measure theta(const PermutationGroup& g, const SymPowSpace& sp,
              const std::vector<Measure>& measures);

/// The two extension conditions instantiated for SP^n_G:
///  1) theta . SP(delta) = delta . pi_G, exhaustively over all point tuples;
///  2) xi . J(theta) . theta_J = theta . SP(xi), on seeded random tuples of
///     measures-of-measures.
LawReport check_kleisli_extension(const PermutationGroup& g, const SpacePtr& space,
                                  size_t trials, uint64_t seed);

}  // namespace ultra
