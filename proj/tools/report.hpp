#pragma once

#include <vector>

#include <json.hpp>

#include "fatpoints/fatpoints.hpp"

namespace fatpoints::cli {

using Json = nlohmann::ordered_json;

Json class_json(const SystemP3& s);
Json class_json(const CurveClassP3& c);
Json class_json(const PlaneSystem& s);
Json class_json(const QuadricSystem& q);

Json step_json(const ReductionStep& step);
Json oracle_json(const OracleResult& r, const OracleConfig& cfg);

/// The report of `dim` / `trace`:
/// {command, input, result, trace, oracle}.
Json dim_report_json(const char* command, const SystemP3& input, const DimReport& report,
                     const Json& oracle);

}  // namespace fatpoints::cli
