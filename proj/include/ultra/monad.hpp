#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ultra/measure.hpp"

namespace ultra {

/// A measure whose atoms are themselves canonical measures over a shared
/// base space. Outer atoms are keyed by canonical equality and kept sorted,
/// so equal functionals have equal representations.
class MeasureOfMeasures {
public:
    using Atom = std::pair<Measure, ExtReal>;

    static MeasureOfMeasures canonicalize(MeasureKind kind, SpacePtr base_space,
                                          std::vector<Atom> raw_atoms);

    /// The outer Dirac delta_mu.
    static MeasureOfMeasures dirac(Measure mu);

    MeasureKind kind() const { return kind_; }
    const SpacePtr& base_space() const { return base_space_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    bool operator==(const MeasureOfMeasures& o) const;
    bool operator<(const MeasureOfMeasures& o) const;

private:
    MeasureOfMeasures(MeasureKind kind, SpacePtr base_space, std::vector<Atom> atoms)
        : kind_(kind), base_space_(std::move(base_space)), atoms_(std::move(atoms)) {}

    MeasureKind kind_;
    SpacePtr base_space_;
    std::vector<Atom> atoms_;
};

/// Depth-3 nesting: a measure over measures-of-measures. Exactly the shape
/// the associativity law needs; no general tower.
class DeepMeasure {
public:
    using Atom = std::pair<MeasureOfMeasures, ExtReal>;

    static DeepMeasure canonicalize(MeasureKind kind, SpacePtr base_space,
                                    std::vector<Atom> raw_atoms);

    MeasureKind kind() const { return kind_; }
    const SpacePtr& base_space() const { return base_space_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

private:
    DeepMeasure(MeasureKind kind, SpacePtr base_space, std::vector<Atom> atoms)
        : kind_(kind), base_space_(std::move(base_space)), atoms_(std::move(atoms)) {}

    MeasureKind kind_;
    SpacePtr base_space_;
    std::vector<Atom> atoms_;
};

/// Monad multiplication: atoms (x, combine(outer, inner)) over all outer and
/// inner atom pairs, canonicalized. Normalization is preserved automatically.
Measure multiply(const MeasureOfMeasures& m);

/// The two ways of flattening the top of a depth-3 nesting, for the
/// associativity law multiply(flatten_outer(M)) == multiply(map_multiply(M)).
MeasureOfMeasures flatten_outer(const DeepMeasure& m);  // xi at J(X)
MeasureOfMeasures map_multiply(const DeepMeasure& m);   // J(xi)

/// Evaluation of test functions lifted to measures: mu -> mu(phi).
std::map<Measure, ExtReal> lift_test_function(const TestFunction& phi,
                                              const std::vector<Measure>& measures);

/// A nonexpanding measure-valued map between spaces, i.e. a morphism of the
/// Kleisli category.
struct MeasureMap {
    SpacePtr source;
    SpacePtr target;
    MeasureKind kind;
    std::vector<Measure> values;  // by source point index

    static MeasureMap of(SpacePtr source, SpacePtr target, MeasureKind kind,
                         std::vector<Measure> values);
    /// x -> delta_{f(x)}, the Kleisli lift of a point map.
    static MeasureMap lift(const PointMap& f, MeasureKind kind);
    const Measure& operator()(size_t x) const { return values[x]; }
};

/// g * f = multiply . push(g) . f.
MeasureMap kleisli_compose(const MeasureMap& g, const MeasureMap& f);

/// A strictly increasing bijection [-inf,0] -> [-inf,+inf], the weight map
/// of the functor isomorphism between max-plus and max-min measures.
struct OrderBijection {
    std::string name;
    std::function<ExtReal(const ExtReal&)> forward;  // [-inf,0] -> [-inf,inf]
    std::function<ExtReal(const ExtReal&)> inverse;

    /// Rational-preserving default: t+1 for t <= -1, -1/t - 1 for
    /// -1 <= t < 0, with 0 -> +inf and -inf -> -inf.
    static OrderBijection rational_default();
    /// Pre-scaled variant t -> default(c*t), c > 0 rational; still a
    /// strictly increasing rational-preserving bijection.
    static OrderBijection scaled(const Rat& c);
};

/// Weight-wise application of alpha (max-plus -> max-min) or its inverse.
Measure convert(const Measure& mu, const OrderBijection& alpha);
MeasureOfMeasures convert(const MeasureOfMeasures& m, const OrderBijection& alpha);

/// supp(multiply(M)) == union of inner supports, and supp(delta_x) == {x}
/// on every base point.
bool support_morphism_check(const MeasureOfMeasures& m);

/// The executable counterexample to monad isomorphism: the two legs of the
/// would-be morphism square for g^alpha on the discrete 3-point space.
/// Their atom weights at point a are alpha(-3) and alpha(-2).
struct NonIsoWitness {
    Measure side1;  // convert(multiply_maxplus(M))
    Measure side2;  // multiply_maxmin(convert(M))
    Rat distance;
};

NonIsoWitness non_isomorphism_witness(const OrderBijection& alpha);

struct LawResult {
    size_t trials = 0;
    size_t failures = 0;
    std::optional<std::string> first_counterexample;

    void record(bool ok, const std::function<std::string()>& describe);
};

struct LawReport {
    std::map<std::string, LawResult> laws;
    bool all_passed() const;
};

/// Left unit, right unit and associativity on seeded random instances;
/// deterministic in (kind, space, trials, seed).
LawReport check_monad_laws(MeasureKind kind, const SpacePtr& space, size_t trials,
                           uint64_t seed);

}  // namespace ultra
