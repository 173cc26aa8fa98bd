#include "ultra/space.hpp"

#include <algorithm>
#include <set>

namespace ultra {

SpacePtr Space::validate(std::vector<std::string> points,
                         std::vector<std::vector<Rat>> dist) {
    const size_t n = points.size();
    if (n == 0)
        throw DomainError("EmptySpace", "a space needs at least one point");
    {
        std::set<std::string> seen;
        for (const auto& p : points)
            if (!seen.insert(p).second)
                throw DomainError("DuplicateLabel", "duplicate point label '" + p + "'");
    }
    if (dist.size() != n)
        throw DomainError("BadMatrix", "distance matrix has wrong row count");
    for (const auto& row : dist)
        if (row.size() != n)
            throw DomainError("BadMatrix", "distance matrix has a wrong-length row");

    for (size_t i = 0; i < n; ++i)
        if (dist[i][i] != 0)
            throw DomainError("NonzeroDiagonal",
                              "d(" + points[i] + "," + points[i] + ") != 0");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (dist[i][j] != dist[j][i])
                throw DomainError("NotSymmetric",
                                  "d(" + points[i] + "," + points[j] + ") != d(" +
                                      points[j] + "," + points[i] + ")");
            if (i != j && dist[i][j] <= 0)
                throw DomainError("NonpositiveOffDiagonal",
                                  "d(" + points[i] + "," + points[j] + ") <= 0");
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (dist[i][j] > std::max(dist[i][k], dist[k][j]))
                    throw DomainError(
                        "StrongTriangleViolation",
                        "d(" + points[i] + "," + points[j] + ") > max(d(" + points[i] +
                            "," + points[k] + "), d(" + points[k] + "," + points[j] +
                            ")) at (" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) + ")");

    return SpacePtr(new Space(std::move(points), std::move(dist)));
}

std::optional<size_t> Space::find(const std::string& label) const {
    for (size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == label) return i;
    return std::nullopt;
}

size_t Space::index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw DomainError("UnknownPoint", "no point labeled '" + label + "'");
}

Rat Space::diameter() const {
    Rat d = 0;
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = i + 1; j < size(); ++j) d = std::max(d, dist_[i][j]);
    return d;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b))
        throw DomainError("MismatchedSpaces", "operands live on different spaces");
}

Partition ball_partition(const SpacePtr& space, const Rat& radius) {
    if (radius <= 0)
        throw DomainError("NonpositiveRadius", "radius must be positive");
    const size_t n = space->size();
    Partition p{space, radius, {}, std::vector<size_t>(n, SIZE_MAX)};
    for (size_t i = 0; i < n; ++i) {
        if (p.block_of[i] != SIZE_MAX) continue;
        std::vector<size_t> block{i};
        p.block_of[i] = p.blocks.size();
        for (size_t j = i + 1; j < n; ++j)
            if (p.block_of[j] == SIZE_MAX && space->dist(i, j) < radius) {
                p.block_of[j] = p.blocks.size();
                block.push_back(j);
            }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

Quotient quotient(const SpacePtr& space, const Rat& radius) {
    Partition part = ball_partition(space, radius);
    std::vector<std::string> labels;
    labels.reserve(part.blocks.size());
    for (const auto& block : part.blocks) {
        std::vector<std::string> names;
        for (size_t i : block) names.push_back(space->label(i));
        std::sort(names.begin(), names.end());
        std::string joined;
        for (const auto& nm : names) {
            if (!joined.empty()) joined += "|";
            joined += nm;
        }
        labels.push_back(std::move(joined));
    }
    const size_t m = part.blocks.size();
    std::vector<std::vector<Rat>> dist(m, std::vector<Rat>(m, Rat(0)));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) {
            // representative distance; constant across choices (checked in tests)
            Rat d = space->dist(part.blocks[a][0], part.blocks[b][0]);
            dist[a][b] = dist[b][a] = d;
        }
    SpacePtr q = Space::validate(std::move(labels), std::move(dist));
    return Quotient{q, PointMap{space, q, part.block_of}};
}

PointMap ProductSpace::projection(size_t k) const {
    std::vector<size_t> assign(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i) assign[i] = tuples[i][k];
    return PointMap{space, factors[k], std::move(assign)};
}

size_t ProductSpace::index_of_tuple(const std::vector<size_t>& tuple) const {
    size_t idx = 0;
    for (size_t k = 0; k < factors.size(); ++k)
        idx = idx * factors[k]->size() + tuple[k];
    return idx;
}

ProductSpace product(const std::vector<SpacePtr>& factors, size_t budget) {
    if (factors.empty())
        throw DomainError("EmptyProduct", "a product needs at least one factor");
    size_t count = 1;
    for (const auto& f : factors) {
        if (count > budget / f->size())
            throw DomainError("BudgetExceeded", "product would exceed " +
                                                    std::to_string(budget) + " points");
        count *= f->size();
    }

    std::vector<std::vector<size_t>> tuples;
    tuples.reserve(count);
    std::vector<size_t> cur(factors.size(), 0);
    for (size_t t = 0; t < count; ++t) {
        tuples.push_back(cur);
        for (size_t k = factors.size(); k-- > 0;) {
            if (++cur[k] < factors[k]->size()) break;
            cur[k] = 0;
        }
    }

    std::vector<std::string> labels;
    labels.reserve(count);
    for (const auto& tup : tuples) {
        std::string l = "(";
        for (size_t k = 0; k < tup.size(); ++k) {
            if (k) l += ",";
            l += factors[k]->label(tup[k]);
        }
        labels.push_back(l + ")");
    }

    std::vector<std::vector<Rat>> dist(count, std::vector<Rat>(count, Rat(0)));
    for (size_t a = 0; a < count; ++a)
        for (size_t b = a + 1; b < count; ++b) {
            Rat d = 0;
            for (size_t k = 0; k < factors.size(); ++k)
                d = std::max(d, factors[k]->dist(tuples[a][k], tuples[b][k]));
            dist[a][b] = dist[b][a] = d;
        }

    SpacePtr space = Space::validate(std::move(labels), std::move(dist));
    return ProductSpace{space, factors, std::move(tuples)};
}

bool check_nonexpanding(const PointMap& f) {
    const size_t n = f.source->size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (f.target->dist(f(i), f(j)) > f.source->dist(i, j)) return false;
    return true;
}

Rat sup_distance(const PointMap& f, const PointMap& g) {
    require_same_space(f.source, g.source);
    require_same_space(f.target, g.target);
    Rat d = 0;
    for (size_t i = 0; i < f.source->size(); ++i)
        d = std::max(d, f.target->dist(f(i), g(i)));
    return d;
}

FiniteSubset FiniteSubset::of(SpacePtr space, std::vector<size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty())
        throw DomainError("EmptySubset", "a finite subset must be nonempty");
    if (members.back() >= space->size())
        throw DomainError("UnknownPoint", "subset member out of range");
    return FiniteSubset{std::move(space), std::move(members)};
}

bool FiniteSubset::operator==(const FiniteSubset& o) const {
    return *space == *o.space && members == o.members;
}

Rat hausdorff_distance(const FiniteSubset& a, const FiniteSubset& b) {
    require_same_space(a.space, b.space);
    const Space& X = *a.space;
    auto directed = [&](const FiniteSubset& from, const FiniteSubset& to) {
        Rat worst = 0;
        for (size_t i : from.members) {
            Rat best = X.dist(i, to.members[0]);
            for (size_t j : to.members) best = std::min(best, X.dist(i, j));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace ultra
