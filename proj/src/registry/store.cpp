#include "bidik/registry/store.hpp"

#include <sodium.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "bidik/core/error.hpp"
#include "bidik/registry/config.hpp"

namespace bidik::registry {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kPeriodFormat = "bidik.period/1";
constexpr const char* kRunFileFormat = "bidik.run-file/1";

std::string sha256_hex(const std::string& data) {
    unsigned char digest[crypto_hash_sha256_BYTES];
    crypto_hash_sha256(digest, reinterpret_cast<const unsigned char*>(data.data()), data.size());
    char hex[crypto_hash_sha256_BYTES * 2 + 1];
    sodium_bin2hex(hex, sizeof hex, digest, sizeof digest);
    return hex;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
    fs::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::Io, "cannot write " + tmp.string());
        }
        out << contents;
        out.flush();
        if (!out) {
            throw Error(ErrorCode::Io, "short write to " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::string seal(const char* format, const json& payload) {
    const json doc = {{"format", format}, {"sha256", sha256_hex(payload.dump())}, {"payload", payload}};
    return doc.dump(2) + "\n";
}

json unseal(const char* format, const fs::path& path) {
    const auto text = read_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::StorageCorrupt, path.string() + ": " + e.what());
    }
    if (!doc.is_object() || doc.value("format", std::string{}) != format || !doc.contains("payload") ||
        !doc.contains("sha256")) {
        throw Error(ErrorCode::StorageCorrupt, path.string() + ": not a " + std::string(format) + " document");
    }
    if (doc["sha256"] != sha256_hex(doc["payload"].dump())) {
        throw Error(ErrorCode::StorageCorrupt, path.string() + ": checksum mismatch");
    }
    return doc["payload"];
}

std::string run_file_name(int sequence) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06d.json", sequence);
    return buf;
}

}  // namespace

std::string RunId::str() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06d", sequence);
    return period.key() + "/" + buf;
}

std::string utc_timestamp(std::chrono::system_clock::time_point now) {
    const auto secs = std::chrono::system_clock::to_time_t(now);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1,
                  tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms));
    return buf;
}

Store::Store(fs::path root) : root_(std::move(root)) {
    if (sodium_init() < 0) {
        throw Error(ErrorCode::Io, "libsodium failed to initialize");
    }
    fs::create_directories(root_ / "periods");
}

fs::path Store::period_dir(const PeriodRef& ref) const { return root_ / "periods" / ref.key(); }

std::shared_mutex& Store::lock_for(const std::string& key) const {
    std::lock_guard guard(locks_mutex_);
    auto& slot = locks_[key];
    if (!slot) {
        slot = std::make_unique<std::shared_mutex>();
    }
    return *slot;
}

std::vector<CriterionSpec> Store::criteria() const {
    const auto path = root_ / "criteria.json";
    if (!fs::exists(path)) {
        return default_criteria();
    }
    return load_criteria_file(path);
}

void Store::set_criteria(const std::vector<CriterionSpec>& criteria) {
    const auto report = validate_criteria(criteria);
    if (!report.empty()) {
        std::string msg = "criteria rejected: ";
        for (std::size_t i = 0; i < report.size(); ++i) {
            msg += (i ? "; " : "") + report[i];
        }
        throw Error(ErrorCode::InvalidConfig, msg);
    }
    std::unique_lock lock(lock_for("criteria"));
    write_file_atomic(root_ / "criteria.json", criteria_to_json(criteria).dump(2) + "\n");
}

Store::PeriodFile Store::read_period(const PeriodRef& ref) const {
    const auto path = period_dir(ref) / "period.json";
    if (!fs::exists(path)) {
        throw Error(ErrorCode::UnknownPeriod, "no period " + std::to_string(ref.year) + " (" + ref.kind + ")");
    }
    const auto payload = unseal(kPeriodFormat, path);
    PeriodFile file;
    try {
        file.period = period_from_json(payload.at("period"));
        for (const auto& a : payload.at("applicants")) {
            file.applicants.push_back(applicant_from_json(a));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::StorageCorrupt, path.string() + ": " + e.what());
    }
    if (file.period.ref.key() != ref.key() || file.period.ref.kind != ref.kind) {
        throw Error(ErrorCode::UnknownPeriod, "no period " + std::to_string(ref.year) + " (" + ref.kind + ")");
    }
    return file;
}

void Store::write_period(const PeriodFile& file) const {
    json applicants = json::array();
    for (const auto& a : file.applicants) {
        applicants.push_back(to_json(a));
    }
    const json payload = {{"period", to_json(file.period)}, {"applicants", std::move(applicants)}};
    write_file_atomic(period_dir(file.period.ref) / "period.json", seal(kPeriodFormat, payload));
}

SelectionPeriod Store::create_period(const PeriodRef& ref, std::optional<std::size_t> quota) {
    if (ref.year < 1900 || ref.year > 9999) {
        throw Error(ErrorCode::InvalidInput, "year must have four digits");
    }
    std::lock_guard create(create_mutex_);
    std::unique_lock lock(lock_for(ref.key()));
    if (fs::exists(period_dir(ref) / "period.json")) {
        throw Error(ErrorCode::Conflict, "period " + ref.key() + " already exists");
    }
    PeriodFile file{SelectionPeriod{ref, quota, PeriodStatus::Open}, {}};
    write_period(file);
    return file.period;
}

std::optional<SelectionPeriod> Store::find_period(const PeriodRef& ref) const {
    try {
        return period(ref);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownPeriod) {
            return std::nullopt;
        }
        throw;
    }
}

SelectionPeriod Store::period(const PeriodRef& ref) const {
    std::shared_lock lock(lock_for(ref.key()));
    return read_period(ref).period;
}

std::vector<SelectionPeriod> Store::periods() const {
    std::vector<SelectionPeriod> out;
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(root_ / "periods")) {
        if (entry.is_directory() && fs::exists(entry.path() / "period.json")) {
            dirs.push_back(entry.path());
        }
    }
    std::sort(dirs.begin(), dirs.end());
    for (const auto& dir : dirs) {
        std::shared_lock lock(lock_for(dir.filename().string()));
        const auto payload = unseal(kPeriodFormat, dir / "period.json");
        out.push_back(period_from_json(payload.at("period")));
    }
    return out;
}

SelectionPeriod Store::set_quota(const PeriodRef& ref, std::optional<std::size_t> quota) {
    std::unique_lock lock(lock_for(ref.key()));
    auto file = read_period(ref);
    if (file.period.status == PeriodStatus::Closed) {
        throw Error(ErrorCode::Conflict, "period " + ref.key() + " is closed");
    }
    file.period.quota = quota;
    write_period(file);
    return file.period;
}

SelectionPeriod Store::close_period(const PeriodRef& ref) {
    std::unique_lock lock(lock_for(ref.key()));
    auto file = read_period(ref);
    if (file.period.status != PeriodStatus::Selected) {
        throw Error(ErrorCode::Conflict, "period " + ref.key() + " is " +
                                             std::string(to_string(file.period.status)) +
                                             "; only a selected period can be closed");
    }
    file.period.status = PeriodStatus::Closed;
    write_period(file);
    return file.period;
}

ApplicantRecord Store::add_applicant(const PeriodRef& ref, ApplicantRecord record) {
    const auto errors = validate_applicant(record);
    if (!errors.empty()) {
        throw Error(ErrorCode::InvalidInput, "applicant " + record.nim + ": " + errors.begin()->first + " " +
                                                 errors.begin()->second);
    }
    std::unique_lock lock(lock_for(ref.key()));
    auto file = read_period(ref);
    if (file.period.status != PeriodStatus::Open) {
        throw Error(ErrorCode::Conflict, "period " + ref.key() + " is not open for registration");
    }
    for (const auto& a : file.applicants) {
        if (a.nim == record.nim) {
            throw Error(ErrorCode::Conflict, "nim " + record.nim + " is already registered");
        }
    }
    file.applicants.push_back(record);
    write_period(file);
    return record;
}

std::vector<ApplicantRecord> Store::applicants(const PeriodRef& ref) const {
    std::shared_lock lock(lock_for(ref.key()));
    return read_period(ref).applicants;
}

std::vector<RunId> Store::runs_unlocked(const PeriodRef& ref) const {
    std::vector<RunId> out;
    const auto dir = period_dir(ref) / "runs";
    if (!fs::exists(dir)) {
        return out;
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.size() != 11 || entry.path().extension() != ".json") {
            continue;
        }
        int seq = 0;
        if (std::sscanf(name.c_str(), "%6d.json", &seq) == 1 && seq > 0) {
            out.push_back(RunId{ref, seq});
        }
    }
    std::sort(out.begin(), out.end(), [](const RunId& a, const RunId& b) { return a.sequence < b.sequence; });
    return out;
}

RunId Store::save_run(const SelectionRun& run) {
    return append_run(run.period, [&run](const SelectionPeriod&, const std::vector<ApplicantRecord>&) {
               return run;
           }).first;
}

std::pair<RunId, SelectionRun> Store::append_run(const PeriodRef& ref, const RunBuilder& build) {
    std::unique_lock lock(lock_for(ref.key()));
    auto file = read_period(ref);
    if (file.period.status == PeriodStatus::Closed) {
        throw Error(ErrorCode::Conflict, "period " + ref.key() + " is closed");
    }
    auto run = build(file.period, file.applicants);
    if (run.period.key() != ref.key()) {
        throw Error(ErrorCode::InvalidInput, "run belongs to period " + run.period.key() + ", not " + ref.key());
    }
    const auto existing = runs_unlocked(ref);
    const int next = existing.empty() ? 1 : existing.back().sequence + 1;
    const RunId id{ref, next};
    write_file_atomic(period_dir(ref) / "runs" / run_file_name(next), seal(kRunFileFormat, run_to_json(run)));
    if (file.period.status == PeriodStatus::Open) {
        file.period.status = PeriodStatus::Selected;
        write_period(file);
    }
    return {id, std::move(run)};
}

SelectionRun Store::load_run(const RunId& id) const {
    std::shared_lock lock(lock_for(id.period.key()));
    if (!fs::exists(period_dir(id.period) / "period.json")) {
        throw Error(ErrorCode::UnknownPeriod, "no period " + id.period.key());
    }
    const auto path = period_dir(id.period) / "runs" / run_file_name(id.sequence);
    if (id.sequence <= 0 || !fs::exists(path)) {
        throw Error(ErrorCode::NotFound, "no selection run " + id.str());
    }
    return run_from_json(unseal(kRunFileFormat, path));
}

std::vector<RunId> Store::runs(const PeriodRef& ref) const {
    std::shared_lock lock(lock_for(ref.key()));
    read_period(ref);
    return runs_unlocked(ref);
}

std::optional<RunId> Store::latest_run(const PeriodRef& ref) const {
    auto all = runs(ref);
    if (all.empty()) {
        return std::nullopt;
    }
    return all.back();
}

std::vector<RecipientRow> Store::list_recipients(int year, const std::string& kind) const {
    const PeriodRef ref{year, kind};
    const auto latest = latest_run(ref);
    if (!latest) {
        throw Error(ErrorCode::NoRunYet, "period " + ref.key() + " has not been selected yet");
    }
    const auto run = load_run(*latest);
    std::vector<RecipientRow> rows;
    for (const auto& e : run.evaluation.recipients) {
        RecipientRow row{e.rank, e.id, {}, 0.0, e.score};
        for (const auto& a : run.applicants) {
            if (a.nim == e.id) {
                row.name = a.name;
                row.nilai = a.nilai;
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bidik::registry
