#include "bidik/api/service.hpp"

#include <functional>
#include <map>

#include "bidik/core/error.hpp"
#include "bidik/registry/config.hpp"
#include "httplib.h"

namespace bidik::api {

using nlohmann::json;
using registry::PeriodRef;

namespace {

/// An error with an explicit HTTP status, for conditions that are not library errors.
struct HttpError {
    int status;
    std::string code;
    std::string message;
    json details = json::object();
};

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownPeriod:
        case ErrorCode::NotFound:
            return 404;
        case ErrorCode::NoRunYet:
        case ErrorCode::Conflict:
            return 409;
        case ErrorCode::StorageCorrupt:
        case ErrorCode::Io:
            return 500;
        case ErrorCode::OutOfDomain:
        case ErrorCode::DegenerateColumn:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::InvalidWeights:
        case ErrorCode::InvalidConfig:
        case ErrorCode::MalformedCsv:
        case ErrorCode::MissingColumn:
        case ErrorCode::InvalidInput:
            return 422;
    }
    return 500;
}

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_problem(httplib::Response& res, int status, const std::string& code, const std::string& message,
                  const json& details = json::object()) {
    send(res, status, {{"code", code}, {"message", message}, {"details", details}});
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

Handler guarded(Handler fn) {
    return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
        try {
            fn(req, res);
        } catch (const HttpError& e) {
            send_problem(res, e.status, e.code, e.message, e.details);
        } catch (const Error& e) {
            send_problem(res, status_for(e.code()), std::string(to_string(e.code())), e.what());
        } catch (const json::exception& e) {
            send_problem(res, 400, "MalformedJson", e.what());
        } catch (const std::exception& e) {
            send_problem(res, 500, "Internal", e.what());
        }
    };
}

json parse_body(const httplib::Request& req) {
    if (req.body.empty()) {
        return json::object();
    }
    try {
        return json::parse(req.body);
    } catch (const json::exception& e) {
        throw HttpError{400, "MalformedJson", e.what()};
    }
}

std::string bearer_token(const httplib::Request& req) {
    const auto header = req.get_header_value("Authorization");
    constexpr std::string_view prefix = "Bearer ";
    if (header.size() <= prefix.size() || header.compare(0, prefix.size(), prefix) != 0) {
        return {};
    }
    return header.substr(prefix.size());
}

PeriodRef period_from(const httplib::Request& req) {
    PeriodRef ref;
    try {
        ref.year = std::stoi(req.matches[1].str());
    } catch (const std::exception&) {
        throw HttpError{404, "UnknownPeriod", "no period " + req.matches[1].str()};
    }
    if (req.has_param("kind")) {
        ref.kind = req.get_param_value("kind");
    }
    return ref;
}

json period_ref_json(const PeriodRef& ref) { return {{"year", ref.year}, {"kind", ref.kind}}; }

std::optional<std::size_t> quota_field(const json& body, const char* key) {
    const auto& v = body.at(key);
    if (v.is_null()) {
        return std::nullopt;
    }
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw HttpError{422, "InvalidInput", "quota must be a non-negative integer or null",
                        {{"fields", {{key, "must be a non-negative integer or null"}}}}};
    }
    return v.get<std::size_t>();
}

json ineligible_json(const registry::SelectionRun& run) {
    json list = json::array();
    for (const auto& x : run.evaluation.ineligible) {
        std::string name;
        for (const auto& a : run.applicants) {
            if (a.nim == x.id) {
                name = a.name;
                break;
            }
        }
        list.push_back({{"id", x.id},
                        {"nim", x.id},
                        {"name", name},
                        {"criterion", x.criterion_id},
                        {"raw", x.raw},
                        {"reason", x.reason}});
    }
    return list;
}

json rows_json(const registry::SelectionRun& run) {
    const auto& ev = run.evaluation;
    std::map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < ev.crisp.rows(); ++i) {
        row_of[ev.crisp.alternatives()[i]] = i;
    }
    std::map<std::string, const registry::ApplicantRecord*> applicant_of;
    for (const auto& a : run.applicants) {
        applicant_of[a.nim] = &a;
    }
    json rows = json::array();
    for (const auto& e : ev.ranking.entries) {
        const auto i = row_of.at(e.id);
        const auto crisp = ev.crisp.row(i);
        const auto normalized = ev.normalized.row(i);
        const auto* a = applicant_of.count(e.id) ? applicant_of[e.id] : nullptr;
        bool recipient = false;
        for (const auto& r : ev.recipients) {
            recipient = recipient || r.id == e.id;
        }
        rows.push_back({{"nim", e.id},
                        {"name", a ? a->name : std::string{}},
                        {"nilai", a ? json(a->nilai) : json(nullptr)},
                        {"crisp", std::vector<double>(crisp.begin(), crisp.end())},
                        {"normalized", std::vector<double>(normalized.begin(), normalized.end())},
                        {"score", e.score},
                        {"rank", e.rank},
                        {"tie_break_applied", e.tie_break_applied},
                        {"recipient", recipient}});
    }
    return rows;
}

std::vector<std::string> ranking_order(const Ranking& r) {
    std::vector<std::string> ids;
    for (const auto& e : r.entries) {
        ids.push_back(e.id);
    }
    return ids;
}

}  // namespace

json Service::run_view(const registry::RunId& id, const registry::SelectionRun& run) {
    auto view = registry::run_to_json(run);
    view["run_id"] = id.str();
    view["rows"] = rows_json(run);
    view["ineligible"] = ineligible_json(run);
    return view;
}

Service::Service(registry::Store& store, ServiceConfig config)
    : store_(store),
      config_(std::move(config)),
      sessions_(config_.admin_user, config_.admin_password, config_.session_ttl) {}

void Service::mount(httplib::Server& server) {
    const auto require_admin = [this](const httplib::Request& req) {
        const auto token = bearer_token(req);
        if (token.empty() || !sessions_.validate(token)) {
            throw HttpError{401, "Unauthorized", "a valid admin session is required"};
        }
    };

    server.Post("/api/login", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto body = parse_body(req);
        const auto user = body.value("username", std::string{});
        const auto password = body.value("password", std::string{});
        const auto session = sessions_.login(user, password);
        if (!session) {
            throw HttpError{401, "Unauthorized", "invalid credentials"};
        }
        send(res, 200, {{"token", session->token}, {"expires_at", registry::utc_timestamp(session->expires_at)}});
    }));

    server.Post("/api/logout", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto token = bearer_token(req);
        if (token.empty() || !sessions_.logout(token)) {
            throw HttpError{401, "Unauthorized", "a valid admin session is required"};
        }
        res.status = 204;
    }));

    server.Get("/api/criteria", guarded([this](const httplib::Request&, httplib::Response& res) {
        send(res, 200, registry::criteria_to_json(store_.criteria()));
    }));

    server.Put("/api/criteria", guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
        require_admin(req);
        const auto criteria = registry::criteria_from_json(parse_body(req));
        const auto report = validate_criteria(criteria);
        if (!report.empty()) {
            throw HttpError{422, "InvalidConfig", "criteria configuration rejected", {{"issues", report}}};
        }
        store_.set_criteria(criteria);
        send(res, 200, registry::criteria_to_json(criteria));
    }));

    server.Get("/api/periods", guarded([this](const httplib::Request&, httplib::Response& res) {
        json list = json::array();
        for (const auto& p : store_.periods()) {
            auto item = registry::to_json(p);
            item["applicants"] = store_.applicants(p.ref).size();
            item["runs"] = store_.runs(p.ref).size();
            list.push_back(std::move(item));
        }
        send(res, 200, {{"periods", std::move(list)}});
    }));

    server.Post("/api/periods", guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
        require_admin(req);
        const auto body = parse_body(req);
        if (!body.contains("year") || !body["year"].is_number_integer()) {
            throw HttpError{422, "InvalidInput", "year is required", {{"fields", {{"year", "must be an integer"}}}}};
        }
        PeriodRef ref{body["year"].get<int>(), body.value("kind", std::string(registry::kDefaultScholarshipKind))};
        const auto quota = body.contains("quota") ? quota_field(body, "quota") : std::nullopt;
        send(res, 201, registry::to_json(store_.create_period(ref, quota)));
    }));

    server.Patch(R"(/api/periods/(\d+))",
                 guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
                     require_admin(req);
                     const auto ref = period_from(req);
                     const auto body = parse_body(req);
                     if (!body.contains("quota")) {
                         throw HttpError{422, "InvalidInput", "nothing to update",
                                         {{"fields", {{"quota", "required"}}}}};
                     }
                     send(res, 200, registry::to_json(store_.set_quota(ref, quota_field(body, "quota"))));
                 }));

    server.Post(R"(/api/periods/(\d+)/close)",
                guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
                    require_admin(req);
                    send(res, 200, registry::to_json(store_.close_period(period_from(req))));
                }));

    server.Post("/api/applicants", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto body = parse_body(req);
        registry::FieldErrors errors;
        auto record = registry::applicant_from_request(body, errors);
        if (!errors.empty()) {
            throw HttpError{422, "InvalidInput", "applicant has invalid fields", {{"fields", errors}}};
        }
        PeriodRef ref{record.period_year, registry::kDefaultScholarshipKind};
        if (body.is_object() && body.contains("kind") && body["kind"].is_string()) {
            ref.kind = body["kind"].get<std::string>();
        } else if (req.has_param("kind")) {
            ref.kind = req.get_param_value("kind");
        }
        send(res, 201, registry::to_json(store_.add_applicant(ref, std::move(record))));
    }));

    server.Get(R"(/api/periods/(\d+)/applicants)",
               guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
                   require_admin(req);
                   const auto ref = period_from(req);
                   json list = json::array();
                   for (const auto& a : store_.applicants(ref)) {
                       list.push_back(registry::to_json(a));
                   }
                   send(res, 200, {{"period", period_ref_json(ref)}, {"applicants", std::move(list)}});
               }));

    server.Post(R"(/api/periods/(\d+)/selection)",
                guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
                    require_admin(req);
                    const auto ref = period_from(req);
                    const auto criteria = store_.criteria();
                    const auto weights = weights_of(criteria);
                    auto [id, run] = store_.append_run(
                        ref, [&](const registry::SelectionPeriod& period,
                                 const std::vector<registry::ApplicantRecord>& pool) {
                            auto r = registry::compose_run(ref, pool, criteria, weights, period.quota,
                                                           registry::utc_timestamp());
                            if (r.evaluation.crisp.empty()) {
                                throw HttpError{422, "NoEligibleApplicants",
                                                "no applicant in the pool passes every conversion table",
                                                {{"ineligible", ineligible_json(r)}}};
                            }
                            return r;
                        });
                    auto view = run_view(id, run);
                    view["status"] = std::string(to_string(store_.period(ref).status));
                    send(res, 200, view);
                }));

    server.Get(R"(/api/periods/(\d+)/selection)",
               guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
                   require_admin(req);
                   const auto ref = period_from(req);
                   store_.period(ref);
                   std::optional<registry::RunId> id;
                   if (req.has_param("run")) {
                       int seq = 0;
                       try {
                           seq = std::stoi(req.get_param_value("run"));
                       } catch (const std::exception&) {
                           throw HttpError{404, "NotFound", "no run " + req.get_param_value("run")};
                       }
                       id = registry::RunId{ref, seq};
                   } else {
                       id = store_.latest_run(ref);
                   }
                   if (!id) {
                       throw HttpError{409, "NoRunYet", "period " + ref.key() + " has not been selected yet"};
                   }
                   send(res, 200, run_view(*id, store_.load_run(*id)));
               }));

    server.Get(R"(/api/periods/(\d+)/runs)",
               guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
                   require_admin(req);
                   const auto ref = period_from(req);
                   json list = json::array();
                   for (const auto& id : store_.runs(ref)) {
                       const auto run = store_.load_run(id);
                       list.push_back({{"run_id", id.str()},
                                       {"sequence", id.sequence},
                                       {"timestamp", run.timestamp},
                                       {"recipients", run.evaluation.recipients.size()}});
                   }
                   send(res, 200, {{"period", period_ref_json(ref)}, {"runs", std::move(list)}});
               }));

    server.Get(R"(/api/periods/(\d+)/recipients)",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                   const auto ref = period_from(req);
                   const auto rows = store_.list_recipients(ref.year, ref.kind);
                   json list = json::array();
                   for (const auto& r : rows) {
                       list.push_back(
                           {{"rank", r.rank}, {"nim", r.nim}, {"name", r.name}, {"nilai", r.nilai}, {"score", r.score}});
                   }
                   const auto latest = store_.latest_run(ref);
                   send(res, 200,
                        {{"period", period_ref_json(ref)},
                         {"run_id", latest ? json(latest->str()) : json(nullptr)},
                         {"recipients", std::move(list)}});
               }));

    server.Post("/api/whatif", guarded([this, require_admin](const httplib::Request& req, httplib::Response& res) {
        require_admin(req);
        const auto body = parse_body(req);
        if (!body.is_object() || !body.contains("year") || !body["year"].is_number_integer()) {
            throw HttpError{422, "InvalidInput", "year is required", {{"fields", {{"year", "must be an integer"}}}}};
        }
        const PeriodRef ref{body["year"].get<int>(),
                            body.value("kind", std::string(registry::kDefaultScholarshipKind))};
        const auto period = store_.period(ref);
        const auto criteria = store_.criteria();

        if (!body.contains("weights") || !body["weights"].is_array()) {
            throw HttpError{422, "InvalidWeights", "weights must be an array of numbers"};
        }
        const WeightVector weights(body["weights"].get<std::vector<double>>());
        if (weights.size() != criteria.size()) {
            throw HttpError{422, "DimensionMismatch",
                            "expected " + std::to_string(criteria.size()) + " weights, got " +
                                std::to_string(weights.size())};
        }
        if (const auto report = validate_weights(weights); !report.empty()) {
            throw HttpError{422, "InvalidWeights", "weight override rejected", {{"issues", report}}};
        }
        const auto quota = body.contains("quota") ? quota_field(body, "quota") : period.quota;

        const auto run = registry::compose_run(ref, store_.applicants(ref), criteria, weights, quota, "");
        json matches = nullptr;
        if (const auto latest = store_.latest_run(ref)) {
            matches = ranking_order(store_.load_run(*latest).evaluation.ranking) == ranking_order(run.evaluation.ranking);
        }
        auto view = registry::run_to_json(run);
        view.erase("timestamp");
        view["rows"] = rows_json(run);
        view["ineligible"] = ineligible_json(run);
        view["persisted"] = false;
        view["matches_latest_run"] = matches;
        send(res, 200, view);
    }));

    if (config_.static_dir) {
        server.set_mount_point("/", config_.static_dir->string());
    }

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (!res.body.empty()) {
            return httplib::Server::HandlerResponse::Unhandled;
        }
        send_problem(res, res.status, res.status == 404 ? "NotFound" : "HttpError",
                     httplib::status_message(res.status));
        return httplib::Server::HandlerResponse::Handled;
    });
}

}  // namespace bidik::api
