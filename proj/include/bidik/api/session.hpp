#pragma once

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace bidik::api {

struct Session {
    std::string token;
    std::chrono::system_clock::time_point expires_at;
};

/// Single-admin login with opaque bearer tokens (128 random bits, base64url).
/// Credentials are compared in constant time.
class SessionManager {
public:
    SessionManager(std::string admin_user, std::string admin_password, std::chrono::seconds ttl);

    /// A new session when the credentials match, otherwise nullopt.
    std::optional<Session> login(const std::string& user, const std::string& password);
    /// True for a live, unexpired token. Expired tokens are dropped.
    bool validate(const std::string& token);
    /// Removes the token; false when it was not live.
    bool logout(const std::string& token);

private:
    using Clock = std::chrono::steady_clock;

    std::string user_digest_;
    std::string password_digest_;
    std::chrono::seconds ttl_;
    std::mutex mutex_;
    std::map<std::string, Clock::time_point> live_;
};

}  // namespace bidik::api
