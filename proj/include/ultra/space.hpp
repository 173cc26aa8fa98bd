#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ultra/extreal.hpp"

namespace ultra {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A finite ultrametric space: distinct point labels and an exact distance
/// matrix satisfying the strong triangle inequality. Immutable once built.
class Space {
public:
    /// Validates and constructs. Error codes: NotSymmetric, NonzeroDiagonal,
    /// NonpositiveOffDiagonal, StrongTriangleViolation (first offending
    /// tuple in row-major scan order).
    static SpacePtr validate(std::vector<std::string> points,
                             std::vector<std::vector<Rat>> dist);

    size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& label(size_t i) const { return points_[i]; }
    const Rat& dist(size_t i, size_t j) const { return dist_[i][j]; }

    std::optional<size_t> find(const std::string& label) const;
    /// Index of a label; throws UnknownPoint.
    size_t index_of(const std::string& label) const;

    /// Largest pairwise distance (0 for a single point).
    Rat diameter() const;

    bool operator==(const Space& o) const {
        return points_ == o.points_ && dist_ == o.dist_;
    }

private:
    Space(std::vector<std::string> points, std::vector<std::vector<Rat>> dist)
        : points_(std::move(points)), dist_(std::move(dist)) {}

    std::vector<std::string> points_;
    std::vector<std::vector<Rat>> dist_;
};

/// Same-space check used by every binary operation; compares contents, not
/// pointers, so a measure with an inline copy of a space interoperates.
void require_same_space(const SpacePtr& a, const SpacePtr& b);

/// The classes of the relation d(x,y) < radius (an equivalence relation by
/// the strong triangle inequality). Blocks ordered by smallest member index.
struct Partition {
    SpacePtr space;
    Rat radius;
    std::vector<std::vector<size_t>> blocks;  // point indices, each sorted
    std::vector<size_t> block_of;             // point index -> block index
};

Partition ball_partition(const SpacePtr& space, const Rat& radius);

struct PointMap {
    SpacePtr source;
    SpacePtr target;
    std::vector<size_t> assignment;  // source index -> target index

    size_t operator()(size_t i) const { return assignment[i]; }
};

/// Quotient by the open-ball partition at radius r: one point per block,
/// labeled by its sorted member labels joined with "|", metrized by
/// representative distance. Returns the space together with q_r.
struct Quotient {
    SpacePtr space;
    PointMap map;  // q_r
};

Quotient quotient(const SpacePtr& space, const Rat& radius);

/// Max-metric product. Points are flat tuples in lexicographic order,
/// labeled "(a,u,...)". Refuses more than `budget` points.
struct ProductSpace {
    SpacePtr space;
    std::vector<SpacePtr> factors;
    std::vector<std::vector<size_t>> tuples;  // product index -> factor indices

    PointMap projection(size_t k) const;
    size_t index_of_tuple(const std::vector<size_t>& tuple) const;
};

ProductSpace product(const std::vector<SpacePtr>& factors, size_t budget = 10000);

bool check_nonexpanding(const PointMap& f);

/// Pointwise sup (= max, finite spaces) of target distance between images.
Rat sup_distance(const PointMap& f, const PointMap& g);

struct FiniteSubset {
    SpacePtr space;
    std::vector<size_t> members;  // sorted, distinct, nonempty

    static FiniteSubset of(SpacePtr space, std::vector<size_t> members);
    bool operator==(const FiniteSubset& o) const;
};

Rat hausdorff_distance(const FiniteSubset& a, const FiniteSubset& b);

}  // namespace ultra
