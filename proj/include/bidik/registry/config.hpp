#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "bidik/core/criteria.hpp"
#include "json.hpp"

namespace bidik::registry {

/// Criteria configuration document:
///
///   {"criteria": [{"id": "C1", "name": "Nilai", "kind": "benefit", "weight": 0.4,
///                  "field": "nilai", "unit": "score 0-100",
///                  "domain": {"lower": 0, "upper": 100, "upper_inclusive": true},
///                  "intervals": [{"lower": 0, "upper": 40, "crisp": 2}, ...]}]}
///
/// `upper: null` marks an unbounded interval. `domain` and `upper_inclusive` are optional.
nlohmann::json criteria_to_json(std::span<const CriterionSpec> criteria);

/// Decodes the document shape only; table coverage and weights are checked by
/// validate_criteria. Throws Error(InvalidConfig) naming the offending path.
std::vector<CriterionSpec> criteria_from_json(const nlohmann::json& doc);

/// Throws Error(Io) when unreadable, Error(InvalidConfig) when not valid JSON or malformed.
std::vector<CriterionSpec> load_criteria_file(const std::filesystem::path& path);

}  // namespace bidik::registry
