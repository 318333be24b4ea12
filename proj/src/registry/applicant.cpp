#include "bidik/registry/applicant.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "bidik/core/error.hpp"
#include "text.hpp"

namespace bidik::registry {

FieldErrors validate_applicant(const ApplicantRecord& r) {
    FieldErrors errors;
    if (trim(r.nim).empty()) {
        errors["nim"] = "required";
    } else if (r.nim.size() > 32) {
        errors["nim"] = "at most 32 characters";
    }
    if (trim(r.name).empty()) {
        errors["name"] = "required";
    }
    if (r.semester < 1) {
        errors["semester"] = "must be a positive integer";
    }
    if (r.period_year < 1900 || r.period_year > 9999) {
        errors["period_year"] = "must be a four-digit year";
    }
    if (!std::isfinite(r.nilai) || r.nilai < 0) {
        errors["nilai"] = "must be a non-negative number";
    }
    if (!std::isfinite(r.income) || r.income < 0) {
        errors["income"] = "must be a non-negative amount";
    }
    if (r.dependents < 0) {
        errors["dependents"] = "must be a non-negative integer";
    }
    return errors;
}

std::optional<double> parse_money(std::string_view text) {
    std::string s(trim(text));
    if (s.size() >= 2 && (s[0] == 'R' || s[0] == 'r') && (s[1] == 'p' || s[1] == 'P')) {
        s = std::string(trim(std::string_view(s).substr(2)));
        if (!s.empty() && s[0] == '.') {
            s.erase(0, 1);
        }
        s = std::string(trim(s));
    }
    if (s.empty()) {
        return std::nullopt;
    }

    std::string_view whole = s;
    std::string_view fraction;
    if (auto dot = whole.find('.'); dot != std::string_view::npos) {
        fraction = whole.substr(dot + 1);
        whole = whole.substr(0, dot);
        if (fraction.empty()) {
            return std::nullopt;
        }
    }
    for (char c : fraction) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
    }

    std::string digits;
    if (whole.find(',') != std::string_view::npos) {
        const auto groups = split(whole, ',');
        for (std::size_t k = 0; k < groups.size(); ++k) {
            const auto& g = groups[k];
            const bool size_ok = k == 0 ? (!g.empty() && g.size() <= 3) : g.size() == 3;
            if (!size_ok) {
                return std::nullopt;
            }
            digits += g;
        }
    } else {
        digits = std::string(whole);
    }
    if (digits.empty()) {
        return std::nullopt;
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
    }
    if (!fraction.empty()) {
        digits += '.';
        digits += fraction;
    }
    return parse_double(digits);
}

double raw_attribute(const ApplicantRecord& r, std::string_view field) {
    if (field == "nilai") {
        return r.nilai;
    }
    if (field == "penghasilan" || field == "income") {
        return r.income;
    }
    if (field == "tanggungan" || field == "dependents") {
        return r.dependents;
    }
    if (field == "semester") {
        return r.semester;
    }
    throw Error(ErrorCode::InvalidConfig, "criterion reads unknown applicant field '" + std::string(field) + "'");
}

std::vector<Alternative> to_alternatives(std::span<const ApplicantRecord> records,
                                         std::span<const CriterionSpec> criteria) {
    std::vector<Alternative> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        Alternative a{r.nim, {}};
        a.raw.reserve(criteria.size());
        for (const auto& c : criteria) {
            a.raw.push_back(raw_attribute(r, c.field));
        }
        out.push_back(std::move(a));
    }
    return out;
}

nlohmann::json to_json(const ApplicantRecord& r) {
    return {{"nim", r.nim},           {"name", r.name},     {"program", r.program},
            {"semester", r.semester}, {"period_year", r.period_year}, {"nilai", r.nilai},
            {"income", r.income},     {"dependents", r.dependents}};
}

ApplicantRecord applicant_from_json(const nlohmann::json& j) {
    try {
        ApplicantRecord r;
        r.nim = j.at("nim").get<std::string>();
        r.name = j.at("name").get<std::string>();
        r.program = j.at("program").get<std::string>();
        r.semester = j.at("semester").get<int>();
        r.period_year = j.at("period_year").get<int>();
        r.nilai = j.at("nilai").get<double>();
        r.income = j.at("income").get<double>();
        r.dependents = j.at("dependents").get<int>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::StorageCorrupt, std::string("applicant record: ") + e.what());
    }
}

namespace {

std::optional<int> request_int(const nlohmann::json& j, const char* key, FieldErrors& errors) {
    if (!j.contains(key) || j[key].is_null()) {
        errors[key] = "required";
        return std::nullopt;
    }
    const auto& v = j[key];
    if (v.is_number_integer()) {
        const auto n = v.get<std::int64_t>();
        if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
            errors[key] = "out of range";
            return std::nullopt;
        }
        return static_cast<int>(n);
    }
    if (v.is_string()) {
        if (auto n = parse_int(v.get<std::string>())) {
            return n;
        }
    }
    errors[key] = "must be an integer";
    return std::nullopt;
}

std::optional<double> request_number(const nlohmann::json& j, const char* key, FieldErrors& errors,
                                     bool money) {
    if (!j.contains(key) || j[key].is_null()) {
        errors[key] = "required";
        return std::nullopt;
    }
    const auto& v = j[key];
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const auto text = v.get<std::string>();
        if (auto n = money ? parse_money(text) : parse_double(text)) {
            return n;
        }
    }
    errors[key] = money ? "must be an amount such as 1500000 or Rp1,500,000" : "must be a number";
    return std::nullopt;
}

std::string request_text(const nlohmann::json& j, const char* key, FieldErrors& errors, bool required) {
    if (!j.contains(key) || j[key].is_null()) {
        if (required) {
            errors[key] = "required";
        }
        return {};
    }
    if (!j[key].is_string()) {
        errors[key] = "must be a string";
        return {};
    }
    return std::string(trim(j[key].get<std::string>()));
}

}  // namespace

ApplicantRecord applicant_from_request(const nlohmann::json& j, FieldErrors& errors) {
    ApplicantRecord r;
    if (!j.is_object()) {
        errors["body"] = "expected a JSON object";
        return r;
    }
    r.nim = request_text(j, "nim", errors, true);
    r.name = request_text(j, "name", errors, true);
    r.program = request_text(j, "program", errors, false);
    r.semester = request_int(j, "semester", errors).value_or(0);
    r.period_year = request_int(j, "period_year", errors).value_or(0);
    r.nilai = request_number(j, "nilai", errors, false).value_or(0.0);
    r.income = request_number(j, "income", errors, true).value_or(0.0);
    r.dependents = request_int(j, "dependents", errors).value_or(0);
    for (auto& [field, msg] : validate_applicant(r)) {
        errors.emplace(field, msg);
    }
    return r;
}

}  // namespace bidik::registry
