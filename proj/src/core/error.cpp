#include "bidik/core/error.hpp"

namespace bidik {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::DegenerateColumn: return "DegenerateColumn";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidWeights: return "InvalidWeights";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::MalformedCsv: return "MalformedCsv";
        case ErrorCode::MissingColumn: return "MissingColumn";
        case ErrorCode::UnknownPeriod: return "UnknownPeriod";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::NoRunYet: return "NoRunYet";
        case ErrorCode::Conflict: return "Conflict";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::StorageCorrupt: return "StorageCorrupt";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace bidik
