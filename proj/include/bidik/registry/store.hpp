#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "bidik/registry/run.hpp"

namespace bidik::registry {

struct RunId {
    PeriodRef period;
    int sequence = 0;

    /// "<period key>/<sequence, 6 digits>", e.g. "2013-bidik-misi/000002".
    std::string str() const;

    bool operator==(const RunId&) const = default;
};

struct RecipientRow {
    int rank = 0;
    std::string nim;
    std::string name;
    double nilai = 0.0;
    double score = 0.0;

    bool operator==(const RecipientRow&) const = default;
};

/// File-backed registry of periods, applicants and selection runs.
///
/// Layout under the root directory:
///
///   criteria.json                              active criteria configuration
///   periods/<year>-<kind>/period.json          period settings and applicant pool
///   periods/<year>-<kind>/runs/<NNNNNN>.json   one immutable file per selection run
///
/// period.json and run files wrap their payload in {"format", "sha256", "payload"};
/// a checksum or schema mismatch on load raises StorageCorrupt. Files are replaced
/// atomically (write to a temporary, then rename).
///
/// Writes to one period are serialized; reads share a lock. Different periods
/// are independent.
class Store {
public:
    explicit Store(std::filesystem::path root);

    const std::filesystem::path& root() const noexcept { return root_; }

    /// Active criteria; the built-in defaults when criteria.json is absent.
    std::vector<CriterionSpec> criteria() const;
    /// Throws Error(InvalidConfig) when the criteria fail validate_criteria.
    void set_criteria(const std::vector<CriterionSpec>& criteria);

    /// Throws Conflict when the period (or another kind with the same slug) exists.
    SelectionPeriod create_period(const PeriodRef& ref, std::optional<std::size_t> quota);
    std::optional<SelectionPeriod> find_period(const PeriodRef& ref) const;
    /// Throws UnknownPeriod.
    SelectionPeriod period(const PeriodRef& ref) const;
    std::vector<SelectionPeriod> periods() const;

    /// Quota may change until the period is closed.
    SelectionPeriod set_quota(const PeriodRef& ref, std::optional<std::size_t> quota);
    /// selected -> closed. Conflict from any other status.
    SelectionPeriod close_period(const PeriodRef& ref);

    /// Registration is allowed only while the period is open.
    /// Throws UnknownPeriod, Conflict (duplicate nim or period not open), InvalidInput.
    ApplicantRecord add_applicant(const PeriodRef& ref, ApplicantRecord record);
    std::vector<ApplicantRecord> applicants(const PeriodRef& ref) const;

    /// Appends an immutable run and moves an open period to selected.
    /// Throws UnknownPeriod, Conflict when the period is closed.
    RunId save_run(const SelectionRun& run);

    using RunBuilder =
        std::function<SelectionRun(const SelectionPeriod&, const std::vector<ApplicantRecord>&)>;

    /// Builds and appends a run while holding the period's write lock, so the
    /// pool cannot change between reading it and freezing the snapshot. If
    /// build throws, nothing is written.
    std::pair<RunId, SelectionRun> append_run(const PeriodRef& ref, const RunBuilder& build);
    /// Throws NotFound for a missing run, UnknownPeriod for a missing period,
    /// StorageCorrupt for a damaged file.
    SelectionRun load_run(const RunId& id) const;
    std::vector<RunId> runs(const PeriodRef& ref) const;
    std::optional<RunId> latest_run(const PeriodRef& ref) const;

    /// Recipients of the latest run in rank order. Throws UnknownPeriod, NoRunYet.
    std::vector<RecipientRow> list_recipients(int year, const std::string& kind) const;

private:
    struct PeriodFile {
        SelectionPeriod period;
        std::vector<ApplicantRecord> applicants;
    };

    std::filesystem::path period_dir(const PeriodRef& ref) const;
    std::shared_mutex& lock_for(const std::string& key) const;
    PeriodFile read_period(const PeriodRef& ref) const;
    void write_period(const PeriodFile& file) const;
    std::vector<RunId> runs_unlocked(const PeriodRef& ref) const;

    std::filesystem::path root_;
    mutable std::mutex locks_mutex_;
    mutable std::map<std::string, std::unique_ptr<std::shared_mutex>> locks_;
    mutable std::mutex create_mutex_;
};

/// UTC time as "YYYY-MM-DDTHH:MM:SS.mmmZ"; defaults to now.
std::string utc_timestamp(std::chrono::system_clock::time_point when = std::chrono::system_clock::now());

}  // namespace bidik::registry
