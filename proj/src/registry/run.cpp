#include "bidik/registry/run.hpp"

#include <cctype>

#include "bidik/core/error.hpp"
#include "bidik/registry/config.hpp"

namespace bidik::registry {

using nlohmann::json;

std::string slugify(std::string_view kind) {
    std::string out;
    bool pending_dash = false;
    for (char ch : kind) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isalnum(c) && c < 0x80) {
            if (pending_dash && !out.empty()) {
                out += '-';
            }
            pending_dash = false;
            out += static_cast<char>(std::tolower(c));
        } else {
            pending_dash = true;
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidInput, "scholarship kind '" + std::string(kind) + "' has no usable characters");
    }
    return out;
}

std::string PeriodRef::key() const { return std::to_string(year) + "-" + slugify(kind); }

std::string_view to_string(PeriodStatus status) {
    switch (status) {
        case PeriodStatus::Open: return "open";
        case PeriodStatus::Selected: return "selected";
        case PeriodStatus::Closed: return "closed";
    }
    return "?";
}

std::optional<PeriodStatus> parse_period_status(std::string_view text) {
    if (text == "open") return PeriodStatus::Open;
    if (text == "selected") return PeriodStatus::Selected;
    if (text == "closed") return PeriodStatus::Closed;
    return std::nullopt;
}

json to_json(const SelectionPeriod& p) {
    return {{"year", p.ref.year},
            {"kind", p.ref.kind},
            {"quota", p.quota ? json(*p.quota) : json(nullptr)},
            {"status", std::string(to_string(p.status))}};
}

namespace {

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::StorageCorrupt, what); }

std::optional<std::size_t> quota_from_json(const json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<std::size_t>();
}

json matrix_to_json(const Matrix& m) {
    return {{"alternatives", m.alternatives()}, {"criteria", m.criteria()}, {"rows", m.to_rows()}};
}

Matrix matrix_from_json(const json& j) {
    return Matrix(j.at("alternatives").get<std::vector<std::string>>(), j.at("criteria").get<std::vector<std::string>>(),
                  j.at("rows").get<std::vector<std::vector<double>>>());
}

json entry_to_json(const RankEntry& e) {
    return {{"id", e.id}, {"score", e.score}, {"rank", e.rank}, {"tie_break_applied", e.tie_break_applied}};
}

RankEntry entry_from_json(const json& j) {
    return RankEntry{j.at("id").get<std::string>(), j.at("score").get<double>(), j.at("rank").get<int>(),
                     j.at("tie_break_applied").get<bool>()};
}

}  // namespace

SelectionPeriod period_from_json(const json& j) {
    try {
        SelectionPeriod p;
        p.ref.year = j.at("year").get<int>();
        p.ref.kind = j.at("kind").get<std::string>();
        p.quota = quota_from_json(j.at("quota"));
        const auto status = parse_period_status(j.at("status").get<std::string>());
        if (!status) {
            corrupt("period status '" + j.at("status").get<std::string>() + "' is unknown");
        }
        p.status = *status;
        return p;
    } catch (const json::exception& e) {
        corrupt(std::string("period record: ") + e.what());
    }
}

SelectionRun compose_run(const PeriodRef& period, const std::vector<ApplicantRecord>& pool,
                         const std::vector<CriterionSpec>& criteria, const WeightVector& weights,
                         std::optional<std::size_t> quota, std::string timestamp) {
    SelectionRun run;
    run.period = period;
    run.timestamp = std::move(timestamp);
    run.criteria = with_weights(criteria, weights);
    run.weights = weights;
    run.quota = quota;
    run.applicants = pool;
    run.evaluation = evaluate(to_alternatives(pool, run.criteria), run.criteria, weights, quota);
    return run;
}

json run_to_json(const SelectionRun& run) {
    const auto& ev = run.evaluation;
    json applicants = json::array();
    for (const auto& a : run.applicants) {
        applicants.push_back(to_json(a));
    }
    json ranking = json::array();
    for (const auto& e : ev.ranking.entries) {
        ranking.push_back(entry_to_json(e));
    }
    json recipients = json::array();
    for (const auto& e : ev.recipients) {
        recipients.push_back(entry_to_json(e));
    }
    json ineligible = json::array();
    for (const auto& x : ev.ineligible) {
        ineligible.push_back({{"id", x.id}, {"criterion", x.criterion_id}, {"raw", x.raw}, {"reason", x.reason}});
    }
    const auto weights = run.weights.values();
    return {
        {"schema", kRunSchema},
        {"period", {{"year", run.period.year}, {"kind", run.period.kind}}},
        {"timestamp", run.timestamp},
        {"criteria", criteria_to_json(run.criteria).at("criteria")},
        {"weights", std::vector<double>(weights.begin(), weights.end())},
        {"quota", run.quota ? json(*run.quota) : json(nullptr)},
        {"applicants", std::move(applicants)},
        {"crisp", matrix_to_json(ev.crisp)},
        {"normalized", matrix_to_json(ev.normalized)},
        {"scores", ev.scores},
        {"ranking", std::move(ranking)},
        {"recipients", std::move(recipients)},
        {"ineligible", std::move(ineligible)},
    };
}

SelectionRun run_from_json(const json& j) {
    try {
        if (!j.is_object() || j.value("schema", std::string{}) != kRunSchema) {
            corrupt(std::string("selection run: schema tag is not ") + kRunSchema);
        }
        SelectionRun run;
        run.period.year = j.at("period").at("year").get<int>();
        run.period.kind = j.at("period").at("kind").get<std::string>();
        run.timestamp = j.at("timestamp").get<std::string>();
        run.criteria = criteria_from_json(json{{"criteria", j.at("criteria")}});
        run.weights = WeightVector(j.at("weights").get<std::vector<double>>());
        run.quota = quota_from_json(j.at("quota"));
        for (const auto& a : j.at("applicants")) {
            run.applicants.push_back(applicant_from_json(a));
        }
        auto& ev = run.evaluation;
        ev.crisp = matrix_from_json(j.at("crisp"));
        ev.normalized = matrix_from_json(j.at("normalized"));
        ev.scores = j.at("scores").get<std::vector<double>>();
        for (const auto& e : j.at("ranking")) {
            ev.ranking.entries.push_back(entry_from_json(e));
        }
        for (const auto& e : j.at("recipients")) {
            ev.recipients.push_back(entry_from_json(e));
        }
        for (const auto& x : j.at("ineligible")) {
            ev.ineligible.push_back(Ineligible{x.at("id").get<std::string>(), x.at("criterion").get<std::string>(),
                                               x.at("raw").get<double>(), x.at("reason").get<std::string>()});
        }
        return run;
    } catch (const json::exception& e) {
        corrupt(std::string("selection run: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::StorageCorrupt) {
            throw;
        }
        corrupt(std::string("selection run: ") + e.what());
    }
}

}  // namespace bidik::registry
