#pragma once

#include <functional>

#include "json.hpp"
#include "ultra/monad.hpp"
#include "ultra/sympow.hpp"

namespace ultra {

using Json = nlohmann::json;

/// Resolves a space reference string (a file path, in the CLI) to a space.
using SpaceResolver = std::function<SpacePtr(const std::string&)>;

SpacePtr parse_space(const Json& j);
Json space_to_json(const Space& space);

/// Accepts {"kind","space","atoms"}. "space" may be inline, a reference
/// string (resolved via `resolve`), or absent when `context` is given; an
/// inline space that disagrees with a non-null context is an error.
Measure parse_measure(const Json& j, const SpacePtr& context = nullptr,
                      const SpaceResolver& resolve = nullptr);
Json measure_to_json(const Measure& mu, bool with_space = true);
/// The compact {"a":"-2","b":"0"} atom view used in reports.
Json atoms_to_json(const Measure& mu);

MeasureOfMeasures parse_measure_of_measures(const Json& j,
                                            const SpacePtr& context = nullptr,
                                            const SpaceResolver& resolve = nullptr);
Json measure_of_measures_to_json(const MeasureOfMeasures& m);

TestFunction parse_test_function(const Json& j, const SpacePtr& space);
Json test_function_to_json(const TestFunction& phi);

PointMap parse_point_map(const Json& j, const SpaceResolver& resolve = nullptr);

MeasureMap parse_measure_map(const Json& j, const SpaceResolver& resolve = nullptr);
Json measure_map_to_json(const MeasureMap& f);

FiniteSubset parse_subset(const Json& j, const SpacePtr& space);

PermutationGroup parse_group(const Json& j, size_t budget = 720);

Json law_report_to_json(const LawReport& report);

}  // namespace ultra
