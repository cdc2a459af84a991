#pragma once

#include <string>

#include <json.hpp>

#include "cuspiso/cusp.hpp"
#include "cuspiso/fillpair.hpp"
#include "cuspiso/verify.hpp"

namespace cuspiso {

nlohmann::json to_json(const PolygonalCusp& c);
PolygonalCusp polygonal_cusp_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RegularCusp& rc);
RegularCusp regular_cusp_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OptimizationReport& rep, bool traces = false);
nlohmann::json to_json(const GapScanReport& rep);
nlohmann::json to_json(const PerimeterComparison& cmp);
nlohmann::json to_json(const PipelineReport& rep);

/// Serializes with real numbers printed to 17 significant digits
/// (round-trip exact for doubles). Object keys come out sorted, so equal
/// documents serialize to identical bytes. indent < 0 gives compact output.
std::string dump_json(const nlohmann::json& j, int indent = 2);

}  // namespace cuspiso
