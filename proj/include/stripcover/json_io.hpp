#pragma once

#include <string>

#include <json.hpp>

#include "stripcover/compare.hpp"
#include "stripcover/models.hpp"
#include "stripcover/optimize.hpp"
#include "stripcover/placement.hpp"
#include "stripcover/verify.hpp"

namespace stripcover {

nlohmann::json to_json(const DensityReport& rep);
nlohmann::json to_json(const OptimalResult& res);
nlohmann::json to_json(const Cover& cover);
nlohmann::json to_json(const CoverageReport& rep);
nlohmann::json to_json(const ComparisonReport& rep);

// Parses a cover previously produced by to_json(Cover). Structural problems
// (missing keys, wrong types) surface as nlohmann exceptions; semantic ones
// (bad model name, nonpositive period, empty window) as InvalidParametersError.
Cover cover_from_json(const nlohmann::json& j);

// One header line plus one data row; the note field is always double-quoted.
std::string comparison_csv(const ComparisonReport& rep);

}  // namespace stripcover
