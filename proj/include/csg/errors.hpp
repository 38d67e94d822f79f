#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace csg {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    ZeroGain,
    BadVertex,
    NotAdjacent,
    LengthMismatch,
    NonUnitModulus,
    Disconnected,
    CapExceeded,
    NotDistanceCompatible,
    NotHermitian,
    NoConvergence,
    DimensionTooLarge,
    DimensionMismatch,
    NonRealCoefficient,
    InvalidCycle,
    EvenLength,
    BadModulus,
    SingularDenominator,
    BadEdgeCount,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ZeroGain: return "ZeroGain";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::NotAdjacent: return "NotAdjacent";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NonUnitModulus: return "NonUnitModulus";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotDistanceCompatible: return "NotDistanceCompatible";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonRealCoefficient: return "NonRealCoefficient";
        case ErrorCode::InvalidCycle: return "InvalidCycle";
        case ErrorCode::EvenLength: return "EvenLength";
        case ErrorCode::BadModulus: return "BadModulus";
        case ErrorCode::SingularDenominator: return "SingularDenominator";
        case ErrorCode::BadEdgeCount: return "BadEdgeCount";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Domain error. Carries an optional witness vertex pair (compatibility
// failures) and an optional 1-based input line (file parsing).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

    Error& with_witness(int u, int v) {
        witness_pair = {u, v};
        return *this;
    }
    Error& with_line(long n) {
        line = n;
        return *this;
    }

    std::optional<std::pair<int, int>> witness_pair;
    std::optional<long> line;

private:
    ErrorCode code_;
};

}  // namespace csg
