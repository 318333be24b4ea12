#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bidik/core/criteria.hpp"
#include "bidik/core/matrix.hpp"
#include "json.hpp"

namespace bidik::registry {

/// One scholarship applicant (a row of the applicant list).
struct ApplicantRecord {
    std::string nim;
    std::string name;
    std::string program;
    int semester = 0;
    int period_year = 0;
    double nilai = 0.0;
    double income = 0.0;
    int dependents = 0;

    bool operator==(const ApplicantRecord&) const = default;
};

/// Field name -> message. Empty when the record is acceptable for registration.
/// Eligibility (e.g. semester outside the table) is not checked here.
using FieldErrors = std::map<std::string, std::string>;

FieldErrors validate_applicant(const ApplicantRecord& record);

/// Parses "1500000", "1,500,000", "Rp1,500,000" or "Rp 1,500,000.50".
/// Digit groups must be exactly three digits. Negative amounts are rejected.
std::optional<double> parse_money(std::string_view text);

/// Raw value of the attribute a criterion reads. Recognized fields:
/// nilai, penghasilan (income), tanggungan (dependents), semester.
double raw_attribute(const ApplicantRecord& record, std::string_view field);

/// Alternatives keyed by nim with raw values aligned to criteria.
std::vector<Alternative> to_alternatives(std::span<const ApplicantRecord> records,
                                         std::span<const CriterionSpec> criteria);

nlohmann::json to_json(const ApplicantRecord& record);

/// Strict decode for stored data; throws Error(StorageCorrupt) on schema mismatch.
ApplicantRecord applicant_from_json(const nlohmann::json& j);

/// Lenient decode for user input. Collects per-field problems instead of throwing.
/// Income may be a number or a money string.
ApplicantRecord applicant_from_request(const nlohmann::json& j, FieldErrors& errors);

}  // namespace bidik::registry
