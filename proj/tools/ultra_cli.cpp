// Batch front end: every core computation as a subcommand over JSON files.
// Results go to stdout as JSON; domain errors to stderr as an error object
// with exit 1; usage errors exit 2.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ultra/json_io.hpp"
#include "ultra/sampler.hpp"

using namespace ultra;

namespace {

struct Config {
    uint64_t seed = 0;
    size_t trials = 200;
    size_t budget_product = 10000;
    size_t budget_group = 720;
    std::string alpha = "default";
    bool pretty = false;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("FileNotFound", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError("MalformedJson", std::string(e.what()) + " in " + path);
    }
}

SpaceResolver file_resolver() {
    return [](const std::string& path) { return parse_space(load_json(path)); };
}

void emit(const Json& j, const Config& cfg) {
    std::cout << (cfg.pretty ? j.dump(2) : j.dump()) << "\n";
}

OrderBijection pick_alpha(const Config& cfg) {
    if (cfg.alpha == "default" || cfg.alpha == "log")
        return OrderBijection::rational_default();
    throw DomainError("BadAlpha", "unknown alpha '" + cfg.alpha + "'");
}

// -ln(-t) applied to max-plus weights; display only, never used in exact
// checks.
Json log_converted_atoms(const Measure& mu) {
    Json out = Json::object();
    for (const auto& [p, w] : mu.atoms()) {
        double t = w.to_double();
        std::string s;
        if (t == 0) {
            s = "inf";
        } else if (std::isinf(t)) {
            s = "-inf";
        } else {
            std::ostringstream os;
            os.precision(17);
            os << -std::log(-t) + 0.0;
            s = os.str();
        }
        out[mu.space()->label(p)] = s;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-min and max-plus measures on finite ultrametric spaces"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--seed", cfg.seed, "Seed for the randomized harnesses");
    app.add_option("--trials", cfg.trials, "Trials per randomized law");
    app.add_option("--alpha", cfg.alpha, "Order bijection: default|log");
    app.add_option("--budget-product", cfg.budget_product, "Max product points");
    app.add_option("--budget-group", cfg.budget_group, "Max group order");
    app.add_flag("--pretty", cfg.pretty, "Indented JSON output");

    std::string space_file, mu_file, nu_file, phi_file, map_file, mom_file;
    std::string f_file, g_file, group_file, x_file, y_file, a_file, b_file;
    std::string measures_file, kind_name_opt = "maxmin";

    auto* validate = app.add_subcommand("validate", "Validate an ultrametric space");
    validate->add_option("space", space_file)->required();

    auto* dist = app.add_subcommand("dist", "Distance between two measures");
    dist->add_option("space", space_file)->required();
    dist->add_option("mu", mu_file)->required();
    dist->add_option("nu", nu_file)->required();

    auto* eval = app.add_subcommand("eval", "Evaluate a measure on a test function");
    eval->add_option("mu", mu_file)->required();
    eval->add_option("phi", phi_file)->required();
    eval->add_option("--space", space_file);

    auto* push = app.add_subcommand("push", "Pushforward along a point map");
    push->add_option("map", map_file)->required();
    push->add_option("mu", mu_file)->required();

    auto* flatten = app.add_subcommand("flatten", "Multiply a measure of measures");
    flatten->add_option("mom", mom_file)->required();
    flatten->add_option("--space", space_file);

    auto* compose = app.add_subcommand("compose",
                                       "Kleisli composition g*f of measure maps");
    compose->add_option("f", f_file)->required();
    compose->add_option("g", g_file)->required();

    auto* conv = app.add_subcommand("convert",
                                    "Convert between max-plus and max-min");
    conv->add_option("mu", mu_file)->required();
    conv->add_option("--space", space_file);

    auto* tens = app.add_subcommand("tensor", "Tensor product of two measures");
    tens->add_option("mu", mu_file)->required();
    tens->add_option("nu", nu_file)->required();
    tens->add_option("--space", space_file);

    auto* spd = app.add_subcommand("sympow-dist",
                                   "Distance between orbits in a symmetric power");
    spd->add_option("space", space_file)->required();
    spd->add_option("group", group_file)->required();
    spd->add_option("x", x_file)->required();
    spd->add_option("y", y_file)->required();

    auto* th = app.add_subcommand("theta", "Kleisli-extension map on a measure tuple");
    th->add_option("space", space_file)->required();
    th->add_option("group", group_file)->required();
    th->add_option("measures", measures_file)->required();

    auto* supp = app.add_subcommand("support", "Support of a measure");
    supp->add_option("mu", mu_file)->required();
    supp->add_option("--space", space_file);

    auto* haus = app.add_subcommand("hausdorff",
                                    "Hausdorff distance between finite subsets");
    haus->add_option("space", space_file)->required();
    haus->add_option("a", a_file)->required();
    haus->add_option("b", b_file)->required();

    auto* laws = app.add_subcommand("laws", "Randomized monad-law harness");
    laws->add_option("--kind", kind_name_opt, "maxmin|maxplus");
    laws->add_option("--space", space_file, "Space file (default: seeded random)");

    auto* klei = app.add_subcommand("kleisli-check",
                                    "Symmetric-power extension-condition harness");
    klei->add_option("space", space_file)->required();
    klei->add_option("group", group_file)->required();

    auto* wit = app.add_subcommand("witness-noniso",
                                   "The monad non-isomorphism counterexample");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto resolver = file_resolver();
        auto context = [&]() -> SpacePtr {
            return space_file.empty() ? nullptr : parse_space(load_json(space_file));
        };
        auto kind_of = [&](const std::string& k) {
            if (k == "maxmin") return MeasureKind::MaxMin;
            if (k == "maxplus") return MeasureKind::MaxPlus;
            throw DomainError("BadInput", "unknown kind '" + k + "'");
        };

        if (validate->parsed()) {
            emit(space_to_json(*parse_space(load_json(space_file))), cfg);
        } else if (dist->parsed()) {
            SpacePtr X = context();
            Measure mu = parse_measure(load_json(mu_file), X, resolver);
            Measure nu = parse_measure(load_json(nu_file), X, resolver);
            emit(Json{{"distance", rational_str(measure_distance(mu, nu))}}, cfg);
        } else if (eval->parsed()) {
            Measure mu = parse_measure(load_json(mu_file), context(), resolver);
            TestFunction phi = parse_test_function(load_json(phi_file), mu.space());
            emit(Json{{"value", evaluate(mu, phi).str()}}, cfg);
        } else if (push->parsed()) {
            PointMap f = parse_point_map(load_json(map_file), resolver);
            Measure mu = parse_measure(load_json(mu_file), f.source, resolver);
            emit(measure_to_json(pushforward(f, mu)), cfg);
        } else if (flatten->parsed()) {
            MeasureOfMeasures m =
                parse_measure_of_measures(load_json(mom_file), context(), resolver);
            emit(measure_to_json(multiply(m)), cfg);
        } else if (compose->parsed()) {
            MeasureMap f = parse_measure_map(load_json(f_file), resolver);
            MeasureMap g = parse_measure_map(load_json(g_file), resolver);
            emit(measure_map_to_json(kleisli_compose(g, f)), cfg);
        } else if (conv->parsed()) {
            Measure mu = parse_measure(load_json(mu_file), context(), resolver);
            Measure out = convert(mu, pick_alpha(cfg));
            if (cfg.alpha == "log" && mu.kind() == MeasureKind::MaxPlus)
                emit(Json{{"kind", "maxmin"}, {"atoms", log_converted_atoms(mu)},
                          {"mode", "float-display"}},
                     cfg);
            else
                emit(measure_to_json(out), cfg);
        } else if (tens->parsed()) {
            Measure mu = parse_measure(load_json(mu_file), context(), resolver);
            Measure nu = parse_measure(load_json(nu_file), context(), resolver);
            emit(measure_to_json(tensor(mu, nu, cfg.budget_product)), cfg);
        } else if (spd->parsed()) {
            SpacePtr X = context();
            PermutationGroup g = parse_group(load_json(group_file), cfg.budget_group);
            auto xs = load_json(x_file).get<std::vector<std::string>>();
            auto ys = load_json(y_file).get<std::vector<std::string>>();
            emit(Json{{"distance", rational_str(sympow_distance(X, g, xs, ys))}},
                 cfg);
        } else if (th->parsed()) {
            SpacePtr X = context();
            PermutationGroup g = parse_group(load_json(group_file), cfg.budget_group);
            SymPowSpace sp = sympow_space(X, g, cfg.budget_product);
            std::vector<Measure> ms;
            for (const Json& mj : load_json(measures_file))
                ms.push_back(parse_measure(mj, X, resolver));
            emit(measure_to_json(theta(g, sp, ms)), cfg);
        } else if (supp->parsed()) {
            Measure mu = parse_measure(load_json(mu_file), context(), resolver);
            Json labels = Json::array();
            for (size_t i : support(mu).members)
                labels.push_back(mu.space()->label(i));
            emit(Json{{"support", std::move(labels)}}, cfg);
        } else if (haus->parsed()) {
            SpacePtr X = context();
            FiniteSubset a = parse_subset(load_json(a_file), X);
            FiniteSubset b = parse_subset(load_json(b_file), X);
            emit(Json{{"distance", rational_str(hausdorff_distance(a, b))}}, cfg);
        } else if (laws->parsed()) {
            SpacePtr X = context();
            if (!X) X = Sampler(cfg.seed).space();
            LawReport r =
                check_monad_laws(kind_of(kind_name_opt), X, cfg.trials, cfg.seed);
            emit(law_report_to_json(r), cfg);
            return r.all_passed() ? 0 : 1;
        } else if (klei->parsed()) {
            SpacePtr X = context();
            PermutationGroup g = parse_group(load_json(group_file), cfg.budget_group);
            LawReport r = check_kleisli_extension(g, X, cfg.trials, cfg.seed);
            emit(law_report_to_json(r), cfg);
            return r.all_passed() ? 0 : 1;
        } else if (wit->parsed()) {
            NonIsoWitness w = non_isomorphism_witness(pick_alpha(cfg));
            if (cfg.alpha == "log") {
                // Recover the exact max-plus weights of both legs, then
                // display them through -ln(-t).
                OrderBijection d = OrderBijection::rational_default();
                emit(Json{{"side1", log_converted_atoms(convert(w.side1, d))},
                          {"side2", log_converted_atoms(convert(w.side2, d))},
                          {"mode", "float-display"}},
                     cfg);
            }
            else
                emit(Json{{"side1", atoms_to_json(w.side1)},
                          {"side2", atoms_to_json(w.side2)},
                          {"distance", rational_str(w.distance)}},
                     cfg);
        }
    } catch (const DomainError& e) {
        Json err{{"error", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        Json err{{"error", "BadInput"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
