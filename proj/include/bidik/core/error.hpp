#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bidik {

enum class ErrorCode {
    OutOfDomain,
    DegenerateColumn,
    DimensionMismatch,
    InvalidWeights,
    InvalidConfig,
    MalformedCsv,
    MissingColumn,
    UnknownPeriod,
    NotFound,
    NoRunYet,
    Conflict,
    InvalidInput,
    StorageCorrupt,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. Every library in this project
/// reports contract violations through it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a raw attribute falls in no interval of a conversion table.
/// Carries the applicant and criterion so callers can mark the applicant ineligible.
class OutOfDomainError : public Error {
public:
    OutOfDomainError(std::string alternative_id, std::string criterion_id, double raw,
                     const std::string& message)
        : Error(ErrorCode::OutOfDomain, message),
          alternative_id_(std::move(alternative_id)),
          criterion_id_(std::move(criterion_id)),
          raw_(raw) {}

    const std::string& alternative_id() const noexcept { return alternative_id_; }
    const std::string& criterion_id() const noexcept { return criterion_id_; }
    double raw() const noexcept { return raw_; }

private:
    std::string alternative_id_;
    std::string criterion_id_;
    double raw_;
};

}  // namespace bidik
