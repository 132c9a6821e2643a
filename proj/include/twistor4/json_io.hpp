#pragma once

#include <string>

#include <json.hpp>

#include "twistor4/classify.hpp"
#include "twistor4/curvature.hpp"
#include "twistor4/twistor_space.hpp"
#include "twistor4/zoo.hpp"

// Curvature input schema and report serialization. All indices in the wire
// format are 1-based; listed components are completed by their symmetry
// images and disagreements between listed values are rejected.
//
// Input schema:
//   {
//     "orientation": "negative" | "positive",
//     "components":  [[a, b, c, d, value], ...],
//     "dcomponents": [[a, b, c, d, e, value], ...]   // optional
//   }

namespace twistor4 {

/// Parses the schema above. Throws InputError on malformed data or on listed
/// components that contradict one another through a symmetry.
AlgebraicCurvature curvature_from_json(const nlohmann::json& j);
AlgebraicCurvature load_curvature(const std::string& path);

/// Minimal component list (one representative per symmetry orbit, nonzero
/// entries only); re-loading reproduces the table exactly.
nlohmann::json curvature_to_json(const AlgebraicCurvature& c);

nlohmann::json blocks_to_json(const CurvatureBlocks& b);
nlohmann::json predicates_to_json(const Predicates& p);
nlohmann::json twistor_report_json(const TwistorPointData& d);
nlohmann::json classification_to_json(const ClassificationReport& r);
nlohmann::json scan_report_json(const ScanReport& r);
nlohmann::json verdict_to_json(const TheoremVerdict& v);

/// %.17g rendering used by the text and CSV writers.
std::string format_double(double v);

}  // namespace twistor4
