#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "ultra/sampler.hpp"

using namespace ultra;
using namespace ultra::testing;

TEST_CASE("canonicalize merges, drops -inf, and checks normalization") {
    SpacePtr X = abc_space();
    Measure m = maxmin(X, {{"a", ExtReal::pos_inf()},
                           {"a", ExtReal(3)},
                           {"b", ExtReal::neg_inf()}});
    REQUIRE(m.atoms().size() == 1);
    CHECK(m.weight_at(X->index_of("a")) == ExtReal::pos_inf());

    try {
        maxmin(X, {{"a", ExtReal(5)}, {"b", ExtReal(2)}});
        FAIL("expected NotNormalized");
    } catch (const DomainError& e) {
        CHECK(e.code() == "NotNormalized");
    }

    Measure mp = maxplus(X, {{"a", ExtReal(0)}, {"b", ExtReal(-1)}, {"a", ExtReal(-2)}});
    CHECK(mp.atoms().size() == 2);
    CHECK(mp.weight_at(0) == ExtReal(0));
    CHECK(mp.weight_at(1) == ExtReal(-1));

    CHECK_THROWS_AS(maxplus(X, {{"a", ExtReal(1)}, {"b", ExtReal(0)}}), DomainError);
    try {
        maxmin(X, {{"a", ExtReal::neg_inf()}});
        FAIL("expected EmptySupport");
    } catch (const DomainError& e) {
        CHECK(e.code() == "EmptySupport");
    }
}

TEST_CASE("dirac evaluates test functions at its point") {
    SpacePtr X = abc_space();
    Measure da = Measure::dirac(MeasureKind::MaxMin, X, std::string("a"));
    CHECK(da.atoms() == std::vector<Measure::Atom>{{0, ExtReal::pos_inf()}});
    Measure dp = Measure::dirac(MeasureKind::MaxPlus, X, std::string("a"));
    CHECK(dp.atoms() == std::vector<Measure::Atom>{{0, ExtReal(0)}});

    TestFunction phi = fn(X, {Rat(7), Rat(1), Rat(9)});
    CHECK(evaluate(da, phi) == ExtReal(7));
    CHECK(evaluate(dp, phi) == ExtReal(7));
    CHECK_THROWS_AS(Measure::dirac(MeasureKind::MaxMin, X, std::string("z")),
                    DomainError);
}

TEST_CASE("evaluate follows the defining formulas") {
    SpacePtr X = abc_space();
    TestFunction phi = fn(X, {Rat(3), Rat(10), Rat(0)});
    Measure m = maxmin(X, {{"a", ExtReal::pos_inf()}, {"b", ExtReal(5)}});
    CHECK(evaluate(m, phi) == ExtReal(5));  // max(min(inf,3), min(5,10))
    Measure mp = maxplus(X, {{"a", ExtReal(0)}, {"b", ExtReal(-2)}});
    CHECK(evaluate(mp, phi) == ExtReal(8));  // max(0+3, -2+10)
}

TEST_CASE("set_value is the max atom weight inside, -inf for an empty join") {
    SpacePtr X = abc_space();
    Measure m = maxmin(X, {{"a", ExtReal::pos_inf()}, {"b", ExtReal(5)}});
    CHECK(set_value(m, FiniteSubset::of(X, {1, 2})) == ExtReal(5));
    CHECK(set_value(m, FiniteSubset::of(X, {0})) == ExtReal::pos_inf());
    CHECK(set_value(m, FiniteSubset::of(X, {2})) == ExtReal::neg_inf());
}

TEST_CASE("support is the atom point set") {
    SpacePtr X = abc_space();
    Measure m = maxmin(X, {{"a", ExtReal::pos_inf()}, {"b", ExtReal(5)}});
    CHECK(support(m).members == std::vector<size_t>{0, 1});
    CHECK(support(Measure::dirac(MeasureKind::MaxMin, X, size_t(0))).members ==
          std::vector<size_t>{0});
    Measure dropped = maxmin(X, {{"a", ExtReal::pos_inf()}, {"b", ExtReal::neg_inf()}});
    CHECK(support(dropped).members == std::vector<size_t>{0});
}

TEST_CASE("pushforward moves atoms and merges collisions by max") {
    SpacePtr X = abc_space();
    SpacePtr Y = Space::validate({"p", "q"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    PointMap f{X, Y, {0, 0, 1}};
    Measure m = maxmin(X, {{"a", ExtReal::pos_inf()}, {"b", ExtReal(5)}, {"c", ExtReal(3)}});
    Measure pushed = pushforward(f, m);
    CHECK(pushed.weight_at(0) == ExtReal::pos_inf());
    CHECK(pushed.weight_at(1) == ExtReal(3));

    PointMap id{X, X, {0, 1, 2}};
    CHECK(pushforward(id, m) == m);

    Measure mp = maxplus(X, {{"a", ExtReal(0)}, {"b", ExtReal(-1)}});
    PointMap collapse{X, Y, {0, 0, 0}};
    Measure mpp = pushforward(collapse, mp);
    CHECK(mpp.atoms() == std::vector<Measure::Atom>{{0, ExtReal(0)}});
}

TEST_CASE("measure_distance worked examples, cross-checked by both oracles") {
    SpacePtr X = abc_space();
    Measure da = Measure::dirac(MeasureKind::MaxMin, X, std::string("a"));
    Measure db = Measure::dirac(MeasureKind::MaxMin, X, std::string("b"));
    CHECK(measure_distance(da, db) == Rat(1));

    Measure mu = maxmin(X, {{"a", ExtReal::pos_inf()}, {"c", ExtReal(5)}});
    Measure nu = maxmin(X, {{"b", ExtReal::pos_inf()}, {"c", ExtReal(5)}});
    CHECK(measure_distance(mu, nu) == Rat(1));
    CHECK(oracle::sampled_distance(mu, nu, 200, 99) == Rat(1));

    CHECK(measure_distance(mu, mu) == Rat(0));
    CHECK_THROWS_AS(measure_distance(mu, maxplus(X, {{"a", ExtReal(0)}})),
                    DomainError);
}

TEST_CASE("sample_r_constant_function contract") {
    SpacePtr X = abc_space();
    TestFunction big = sample_r_constant_function(X, Rat(100), 5);
    CHECK(big.values[0] == big.values[1]);
    CHECK(big.values[1] == big.values[2]);

    TestFunction fine = sample_r_constant_function(X, Rat(1, 2), 5);
    TestFunction again = sample_r_constant_function(X, Rat(1, 2), 5);
    CHECK(fine.values == again.values);

    TestFunction mid = sample_r_constant_function(X, Rat(3, 2), 5);
    CHECK(mid.values[0] == mid.values[1]);

    CHECK_THROWS_AS(sample_r_constant_function(X, Rat(0), 5), DomainError);
}

TEST_CASE("canonical equality matches the brute-force functional oracle") {
    Sampler sampler(21);
    for (int trial = 0; trial < 40; ++trial) {
        SpacePtr X = sampler.space(4);
        auto kind = trial % 2 ? MeasureKind::MaxMin : MeasureKind::MaxPlus;
        Measure mu = sampler.measure(kind, X);
        Measure nu = sampler.measure(kind, X);
        CHECK((mu == nu) == oracle::functionally_equal(mu, nu));
        CHECK(oracle::functionally_equal(mu, mu));
    }
}

TEST_CASE("distance < r iff the q_r pushforwards agree") {
    Sampler sampler(22);
    for (int trial = 0; trial < 100; ++trial) {
        SpacePtr X = sampler.space();
        auto kind = trial % 2 ? MeasureKind::MaxMin : MeasureKind::MaxPlus;
        Measure mu = sampler.measure(kind, X);
        Measure nu = sampler.measure(kind, X);
        Rat r = sampler.positive_rational();
        Quotient q = quotient(X, r);
        bool close = measure_distance(mu, nu) < r;
        bool agree = pushforward(q.map, mu) == pushforward(q.map, nu);
        CHECK(close == agree);
    }
}

TEST_CASE("the measure distance is an ultrametric") {
    Sampler sampler(23);
    for (int trial = 0; trial < 100; ++trial) {
        SpacePtr X = sampler.space();
        auto kind = trial % 2 ? MeasureKind::MaxMin : MeasureKind::MaxPlus;
        Measure a = sampler.measure(kind, X);
        Measure b = sampler.measure(kind, X);
        Measure c = sampler.measure(kind, X);
        CHECK(measure_distance(a, b) == measure_distance(b, a));
        CHECK(measure_distance(a, b) <=
              std::max(measure_distance(a, c), measure_distance(c, b)));
        CHECK((measure_distance(a, b) == 0) == (a == b));
    }
}

TEST_CASE("the Dirac map is an isometric embedding") {
    Sampler sampler(24);
    for (int trial = 0; trial < 20; ++trial) {
        SpacePtr X = sampler.space();
        for (size_t i = 0; i < X->size(); ++i)
            for (size_t j = 0; j < X->size(); ++j) {
                Measure di = Measure::dirac(MeasureKind::MaxMin, X, i);
                Measure dj = Measure::dirac(MeasureKind::MaxMin, X, j);
                CHECK(measure_distance(di, dj) == X->dist(i, j));
            }
    }
}

TEST_CASE("close measures agree on every r-ball-constant function") {
    Sampler sampler(25);
    for (int trial = 0; trial < 60; ++trial) {
        SpacePtr X = sampler.space();
        Measure mu = sampler.measure(MeasureKind::MaxMin, X);
        Measure nu = sampler.measure(MeasureKind::MaxMin, X);
        Rat r = sampler.positive_rational();
        if (!(measure_distance(mu, nu) < r)) continue;
        for (int s = 0; s < 20; ++s) {
            TestFunction phi = sample_r_constant_function(X, r, sampler.sub_seed());
            CHECK(evaluate(mu, phi) == evaluate(nu, phi));
        }
    }
}

TEST_CASE("pushforward along a nonexpanding map is nonexpanding") {
    Sampler sampler(26);
    for (int trial = 0; trial < 60; ++trial) {
        SpacePtr X = sampler.space();
        SpacePtr Y = sampler.space();
        PointMap f = sampler.nonexpanding_map(X, Y);
        Measure mu = sampler.measure(MeasureKind::MaxMin, X);
        Measure nu = sampler.measure(MeasureKind::MaxMin, X);
        CHECK(measure_distance(pushforward(f, mu), pushforward(f, nu)) <=
              measure_distance(mu, nu));
    }
}

TEST_CASE("the functor is locally non-expansive") {
    Sampler sampler(27);
    for (int trial = 0; trial < 60; ++trial) {
        SpacePtr X = sampler.space();
        SpacePtr Y = sampler.space();
        PointMap f = sampler.nonexpanding_map(X, Y);
        PointMap g = sampler.nonexpanding_map(X, Y);
        Measure mu = sampler.measure(MeasureKind::MaxMin, X);
        CHECK(measure_distance(pushforward(f, mu), pushforward(g, mu)) <=
              sup_distance(f, g));
    }
}

TEST_CASE("set_value is consistent with the support and monotone") {
    Sampler sampler(28);
    for (int trial = 0; trial < 60; ++trial) {
        SpacePtr X = sampler.space();
        auto kind = trial % 2 ? MeasureKind::MaxMin : MeasureKind::MaxPlus;
        Measure mu = sampler.measure(kind, X);
        CHECK(set_value(mu, support(mu)) == neutral_weight(kind));
        FiniteSubset a = sampler.subset(X);
        std::vector<size_t> bigger = a.members;
        bigger.push_back(sampler.pick(X->size()));
        FiniteSubset b = FiniteSubset::of(X, std::move(bigger));
        CHECK(set_value(mu, a) <= set_value(mu, b));
    }
}
