#pragma once

// JSON forms of the reports printed by the command-line tool.

#include <string>
#include <vector>

#include <json.hpp>

#include "clusterbn/bounds.hpp"
#include "clusterbn/configuration.hpp"
#include "clusterbn/sufficiency.hpp"

namespace clusterbn {

/// A JSON number when the value fits in 64 bits, otherwise a decimal string.
nlohmann::json json_integer(const Integer& value);

/// {surface, delta?, n, points: [{id, level, kind, origin, end, proximities,
/// e_sq, multiplicity}], gamma, origins, ends, proximity_matrix, proximity_inverse}
nlohmann::json analyze_json(const Configuration& c);

/// Rebuilds configuration-file text from analyze_json output.
std::string config_text_from_analyze_json(const nlohmann::json& report);

/// Labels of the hat points per origin: original points keep `p<id>`, added
/// satellites are numbered q1, q2, ... across origins in order.
std::vector<std::vector<std::string>> hat_labels(const DValues& values);

/// {origins: [{id, d, hat_size, members, hat, added, certificate}], total_d, n_example}
nlohmann::json dvalue_json(const DValues& values);

/// {surface, delta?, n_stated, n_example, d, gamma, epsilon?, terms, bound, convention, kind}
nlohmann::json bound_report_json(const BoundReport& report);

nlohmann::json attached_bounds_json(const AttachedFoliationBounds& bounds);

}  // namespace clusterbn
