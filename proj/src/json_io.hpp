#pragma once

// JSON encoding of instances, families and reports. Rationals are strings
// "p" or "p/q"; unbounded x-coordinates are "inf" / "-inf".

#include "additive.hpp"
#include "arrangement.hpp"
#include "cutting.hpp"
#include "incidence.hpp"
#include "pipeline.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace transcut {

using Json = nlohmann::json;

/// Malformed input; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Json to_json(const XBound& x);
Json to_json(const Point& p);
Json to_json(const Translate& t);

/// Accepts rational strings and JSON integers.
Rational rational_from_json(const Json& j, const std::string& where);

/// Parses the text as JSON and reports syntax errors with line and column.
Json parse_json_text(const std::string& text);

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

/// Reads "translates" (an instance file works too).
CurveFamily family_from_json(const Json& j);
Json family_to_json(const CurveFamily& fam);

std::vector<Point> points_from_json(const Json& j, const std::string& where);

Json arrangement_to_json(const Arrangement& arr, bool with_levels);
Json cutting_report_to_json(const Cutting& cutting, const CuttingReport& report);
Json cell_to_json(const Cell& cell);

/// Missing keys keep their defaults. Unknown keys are rejected.
PipelineConfig pipeline_config_from_json(const Json& j);
Json pipeline_config_to_json(const PipelineConfig& config);
Json pipeline_report_to_json(const PipelineReport& report);

Json gap_to_json(const Gap& gap);
Json gap_fit_to_json(const std::optional<GapFit>& fit, const GapFitOptions& options,
                     std::size_t input_size);

}  // namespace transcut
