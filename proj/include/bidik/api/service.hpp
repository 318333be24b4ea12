#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

#include "bidik/api/session.hpp"
#include "bidik/registry/store.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace bidik::api {

struct ServiceConfig {
    std::string admin_user;
    std::string admin_password;
    std::chrono::seconds session_ttl{std::chrono::hours(8)};
    /// When set, files under this directory are served at "/".
    std::optional<std::filesystem::path> static_dir;
};

/// JSON HTTP front end over a Store. Routes (admin = Bearer token required):
///
///   POST   /api/login                          credentials -> token
///   POST   /api/logout                         admin
///   GET    /api/criteria                       active criteria configuration
///   PUT    /api/criteria                       admin
///   GET    /api/periods                        period list
///   POST   /api/periods                        admin, {year, kind?, quota?}
///   PATCH  /api/periods/{year}                 admin, {quota}
///   POST   /api/periods/{year}/close           admin
///   POST   /api/applicants                     public registration
///   GET    /api/periods/{year}/applicants      admin
///   POST   /api/periods/{year}/selection       admin, runs FMADM + SAW and persists
///   GET    /api/periods/{year}/selection       admin, latest run (?run=N for history)
///   GET    /api/periods/{year}/runs            admin, run history
///   GET    /api/periods/{year}/recipients      public
///   POST   /api/whatif                         admin, never persisted
///
/// Period routes take ?kind=... (default "bidik misi"). Errors are
/// {code, message, details} documents.
class Service {
public:
    Service(registry::Store& store, ServiceConfig config);

    void mount(httplib::Server& server);

    /// Response body for a stored run: the run document plus run_id and
    /// per-applicant rows {nim, name, nilai, crisp, normalized, score, rank, recipient}.
    static nlohmann::json run_view(const registry::RunId& id, const registry::SelectionRun& run);

private:
    registry::Store& store_;
    ServiceConfig config_;
    SessionManager sessions_;
};

}  // namespace bidik::api
