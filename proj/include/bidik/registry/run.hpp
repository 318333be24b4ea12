#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bidik/core/pipeline.hpp"
#include "bidik/registry/applicant.hpp"
#include "json.hpp"

namespace bidik::registry {

inline constexpr const char* kDefaultScholarshipKind = "bidik misi";

struct PeriodRef {
    int year = 0;
    std::string kind = kDefaultScholarshipKind;

    /// Directory name: "<year>-<slug of kind>", e.g. "2013-bidik-misi".
    std::string key() const;

    bool operator==(const PeriodRef&) const = default;
};

/// Lowercase ASCII alphanumerics with single dashes between words. Throws
/// Error(InvalidInput) when nothing usable remains.
std::string slugify(std::string_view kind);

enum class PeriodStatus { Open, Selected, Closed };

std::string_view to_string(PeriodStatus status);
std::optional<PeriodStatus> parse_period_status(std::string_view text);

struct SelectionPeriod {
    PeriodRef ref;
    /// Missing quota selects every eligible applicant.
    std::optional<std::size_t> quota;
    PeriodStatus status = PeriodStatus::Open;

    bool operator==(const SelectionPeriod&) const = default;
};

/// Snapshot of one selection: the inputs it saw and every intermediate table.
struct SelectionRun {
    PeriodRef period;
    std::string timestamp;
    std::vector<CriterionSpec> criteria;
    WeightVector weights;
    std::optional<std::size_t> quota;
    std::vector<ApplicantRecord> applicants;
    Evaluation evaluation;

    bool operator==(const SelectionRun&) const = default;
};

/// Runs the pipeline over pool and packages the result. The pool is kept in
/// full (eligible and ineligible applicants) as the run's frozen snapshot.
SelectionRun compose_run(const PeriodRef& period, const std::vector<ApplicantRecord>& pool,
                         const std::vector<CriterionSpec>& criteria, const WeightVector& weights,
                         std::optional<std::size_t> quota, std::string timestamp);

inline constexpr const char* kRunSchema = "bidik.selection-run/1";

nlohmann::json to_json(const SelectionPeriod& period);
SelectionPeriod period_from_json(const nlohmann::json& j);

nlohmann::json run_to_json(const SelectionRun& run);
/// Throws Error(StorageCorrupt) on a schema tag mismatch or missing/ill-typed fields.
SelectionRun run_from_json(const nlohmann::json& j);

}  // namespace bidik::registry
