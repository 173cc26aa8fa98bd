#include "ultra/json_io.hpp"

namespace ultra {

namespace {

DomainError bad(const std::string& what) {
    return DomainError("BadInput", what);
}

Rat rational_field(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw bad("expected a rational as \"p/q\" or integer string");
}

ExtReal extreal_field(const Json& j) {
    if (j.is_string()) return parse_extreal(j.get<std::string>());
    if (j.is_number_integer()) return ExtReal(Rat(j.get<long long>()));
    throw bad("expected a weight as \"inf\", \"-inf\", \"p/q\" or integer string");
}

MeasureKind kind_field(const Json& j) {
    std::string k = j.at("kind").get<std::string>();
    if (k == "maxmin") return MeasureKind::MaxMin;
    if (k == "maxplus") return MeasureKind::MaxPlus;
    throw bad("unknown measure kind '" + k + "'");
}

SpacePtr space_field(const Json& j, const SpacePtr& context,
                     const SpaceResolver& resolve) {
    SpacePtr inline_space;
    if (j.contains("space")) {
        const Json& s = j.at("space");
        if (s.is_string()) {
            if (!resolve) throw bad("space references are not allowed here");
            inline_space = resolve(s.get<std::string>());
        } else {
            inline_space = parse_space(s);
        }
    }
    if (inline_space && context) {
        require_same_space(inline_space, context);
        return context;
    }
    if (inline_space) return inline_space;
    if (context) return context;
    throw bad("no space given and none in context");
}

}  // namespace

SpacePtr parse_space(const Json& j) {
    std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
    std::vector<std::vector<Rat>> dist;
    for (const Json& row : j.at("dist")) {
        std::vector<Rat> r;
        for (const Json& cell : row) r.push_back(rational_field(cell));
        dist.push_back(std::move(r));
    }
    return Space::validate(std::move(points), std::move(dist));
}

Json space_to_json(const Space& space) {
    Json dist = Json::array();
    for (size_t i = 0; i < space.size(); ++i) {
        Json row = Json::array();
        for (size_t j2 = 0; j2 < space.size(); ++j2)
            row.push_back(rational_str(space.dist(i, j2)));
        dist.push_back(std::move(row));
    }
    return Json{{"points", space.points()}, {"dist", std::move(dist)}};
}

Measure parse_measure(const Json& j, const SpacePtr& context,
                      const SpaceResolver& resolve) {
    MeasureKind kind = kind_field(j);
    SpacePtr space = space_field(j, context, resolve);
    std::vector<Measure::Atom> atoms;
    for (const Json& a : j.at("atoms"))
        atoms.emplace_back(space->index_of(a.at("point").get<std::string>()),
                           extreal_field(a.at("weight")));
    return Measure::canonicalize(kind, space, std::move(atoms));
}

Json measure_to_json(const Measure& mu, bool with_space) {
    Json atoms = Json::array();
    for (const auto& [p, w] : mu.atoms())
        atoms.push_back(Json{{"point", mu.space()->label(p)}, {"weight", w.str()}});
    Json out{{"kind", kind_name(mu.kind())}, {"atoms", std::move(atoms)}};
    if (with_space) out["space"] = space_to_json(*mu.space());
    return out;
}

Json atoms_to_json(const Measure& mu) {
    Json out = Json::object();
    for (const auto& [p, w] : mu.atoms()) out[mu.space()->label(p)] = w.str();
    return out;
}

MeasureOfMeasures parse_measure_of_measures(const Json& j, const SpacePtr& context,
                                            const SpaceResolver& resolve) {
    MeasureKind kind = kind_field(j);
    SpacePtr space = space_field(j, context, resolve);
    std::vector<MeasureOfMeasures::Atom> atoms;
    for (const Json& a : j.at("outer"))
        atoms.emplace_back(parse_measure(a.at("measure"), space, resolve),
                           extreal_field(a.at("weight")));
    return MeasureOfMeasures::canonicalize(kind, space, std::move(atoms));
}

Json measure_of_measures_to_json(const MeasureOfMeasures& m) {
    Json outer = Json::array();
    for (const auto& [mu, w] : m.atoms())
        outer.push_back(Json{{"measure", measure_to_json(mu, false)},
                             {"weight", w.str()}});
    return Json{{"kind", kind_name(m.kind())},
                {"space", space_to_json(*m.base_space())},
                {"outer", std::move(outer)}};
}

TestFunction parse_test_function(const Json& j, const SpacePtr& space) {
    const Json& values = j.at("values");
    std::vector<Rat> v(space->size());
    std::vector<bool> seen(space->size(), false);
    for (auto it = values.begin(); it != values.end(); ++it) {
        size_t i = space->index_of(it.key());
        v[i] = rational_field(it.value());
        seen[i] = true;
    }
    for (size_t i = 0; i < space->size(); ++i)
        if (!seen[i])
            throw bad("test function missing a value for '" + space->label(i) + "'");
    return TestFunction::of(space, std::move(v));
}

Json test_function_to_json(const TestFunction& phi) {
    Json values = Json::object();
    for (size_t i = 0; i < phi.space->size(); ++i)
        values[phi.space->label(i)] = rational_str(phi.values[i]);
    return Json{{"values", std::move(values)}};
}

PointMap parse_point_map(const Json& j, const SpaceResolver& resolve) {
    SpacePtr source = space_field(Json{{"space", j.at("source")}}, nullptr, resolve);
    SpacePtr target = space_field(Json{{"space", j.at("target")}}, nullptr, resolve);
    const Json& map = j.at("map");
    std::vector<size_t> assign(source->size(), SIZE_MAX);
    for (auto it = map.begin(); it != map.end(); ++it)
        assign[source->index_of(it.key())] =
            target->index_of(it.value().get<std::string>());
    for (size_t i = 0; i < assign.size(); ++i)
        if (assign[i] == SIZE_MAX)
            throw bad("point map missing an image for '" + source->label(i) + "'");
    return PointMap{source, target, std::move(assign)};
}

MeasureMap parse_measure_map(const Json& j, const SpaceResolver& resolve) {
    MeasureKind kind = kind_field(j);
    SpacePtr source = space_field(Json{{"space", j.at("source")}}, nullptr, resolve);
    SpacePtr target = space_field(Json{{"space", j.at("target")}}, nullptr, resolve);
    const Json& map = j.at("map");
    std::vector<std::optional<Measure>> values(source->size());
    for (auto it = map.begin(); it != map.end(); ++it) {
        std::vector<Measure::Atom> atoms;
        for (const Json& a : it.value())
            atoms.emplace_back(target->index_of(a.at("point").get<std::string>()),
                               extreal_field(a.at("weight")));
        values[source->index_of(it.key())] =
            Measure::canonicalize(kind, target, std::move(atoms));
    }
    std::vector<Measure> out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (!values[i])
            throw bad("measure map missing a value for '" + source->label(i) + "'");
        out.push_back(std::move(*values[i]));
    }
    return MeasureMap::of(source, target, kind, std::move(out));
}

Json measure_map_to_json(const MeasureMap& f) {
    Json map = Json::object();
    for (size_t i = 0; i < f.source->size(); ++i) {
        Json atoms = Json::array();
        for (const auto& [p, w] : f(i).atoms())
            atoms.push_back(Json{{"point", f.target->label(p)}, {"weight", w.str()}});
        map[f.source->label(i)] = std::move(atoms);
    }
    return Json{{"kind", kind_name(f.kind)},
                {"source", space_to_json(*f.source)},
                {"target", space_to_json(*f.target)},
                {"map", std::move(map)}};
}

FiniteSubset parse_subset(const Json& j, const SpacePtr& space) {
    const Json& members = j.is_array() ? j : j.at("members");
    std::vector<size_t> idx;
    for (const Json& m : members) idx.push_back(space->index_of(m.get<std::string>()));
    return FiniteSubset::of(space, std::move(idx));
}

PermutationGroup parse_group(const Json& j, size_t budget) {
    size_t n = j.at("n").get<size_t>();
    std::vector<Perm> gens;
    for (const Json& g : j.at("generators")) {
        Perm p;
        for (const Json& v : g) {
            size_t image = v.get<size_t>();
            if (image < 1) throw bad("permutation images are one-based");
            p.push_back(image - 1);
        }
        gens.push_back(std::move(p));
    }
    return group_closure(n, gens, budget);
}

Json law_report_to_json(const LawReport& report) {
    Json out = Json::object();
    for (const auto& [name, result] : report.laws) {
        Json r{{"trials", result.trials}, {"failures", result.failures}};
        if (result.first_counterexample)
            r["first_counterexample"] = *result.first_counterexample;
        out[name] = std::move(r);
    }
    return out;
}

}  // namespace ultra
