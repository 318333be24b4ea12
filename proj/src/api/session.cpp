#include "bidik/api/session.hpp"

#include <sodium.h>

#include <stdexcept>

namespace bidik::api {

namespace {

std::string digest(const std::string& text) {
    unsigned char out[crypto_generichash_BYTES];
    crypto_generichash(out, sizeof out, reinterpret_cast<const unsigned char*>(text.data()), text.size(), nullptr, 0);
    return std::string(reinterpret_cast<const char*>(out), sizeof out);
}

bool same_digest(const std::string& a, const std::string& b) {
    return a.size() == b.size() && sodium_memcmp(a.data(), b.data(), a.size()) == 0;
}

std::string random_token() {
    unsigned char raw[16];
    randombytes_buf(raw, sizeof raw);
    char text[sodium_base64_ENCODED_LEN(16, sodium_base64_VARIANT_URLSAFE_NO_PADDING)];
    sodium_bin2base64(text, sizeof text, raw, sizeof raw, sodium_base64_VARIANT_URLSAFE_NO_PADDING);
    return text;
}

}  // namespace

SessionManager::SessionManager(std::string admin_user, std::string admin_password, std::chrono::seconds ttl)
    : ttl_(ttl) {
    if (sodium_init() < 0) {
        throw std::runtime_error("libsodium failed to initialize");
    }
    if (admin_user.empty() || admin_password.empty()) {
        throw std::invalid_argument("admin credentials must not be empty");
    }
    user_digest_ = digest(admin_user);
    password_digest_ = digest(admin_password);
}

std::optional<Session> SessionManager::login(const std::string& user, const std::string& password) {
    // Evaluate both comparisons so timing does not reveal which one failed.
    const bool user_ok = same_digest(digest(user), user_digest_);
    const bool password_ok = same_digest(digest(password), password_digest_);
    if (!(user_ok & password_ok)) {
        return std::nullopt;
    }
    Session s{random_token(), std::chrono::system_clock::now() + ttl_};
    std::lock_guard lock(mutex_);
    live_[s.token] = Clock::now() + ttl_;
    return s;
}

bool SessionManager::validate(const std::string& token) {
    std::lock_guard lock(mutex_);
    const auto it = live_.find(token);
    if (it == live_.end()) {
        return false;
    }
    if (Clock::now() >= it->second) {
        live_.erase(it);
        return false;
    }
    return true;
}

bool SessionManager::logout(const std::string& token) {
    std::lock_guard lock(mutex_);
    const auto it = live_.find(token);
    if (it == live_.end()) {
        return false;
    }
    const bool was_live = Clock::now() < it->second;
    live_.erase(it);
    return was_live;
}

}  // namespace bidik::api
