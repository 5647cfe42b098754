#pragma once

#include <stdexcept>
#include <string>

namespace hyplac {

// Every recoverable failure in the library carries one of these codes so the
// CLI can map them to exit codes without string matching.
enum class ErrorCode {
    InvalidInput,
    DivisionByZero,
    SingularMatrix,
    NonGenericParameters,
    NeedsDualization,
    InvalidCandidate,
    Reducible,
    NotAUnit,
    NotAPseudoreflection,
    NoInvariantForm,
    PrecisionExhausted,
    PoleInDenominatorParameters,
    NotSeriesNormalizable,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NonGenericParameters: return "NonGenericParameters";
        case ErrorCode::NeedsDualization: return "NeedsDualization";
        case ErrorCode::InvalidCandidate: return "InvalidCandidate";
        case ErrorCode::Reducible: return "Reducible";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::NotAPseudoreflection: return "NotAPseudoreflection";
        case ErrorCode::NoInvariantForm: return "NoInvariantForm";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::PoleInDenominatorParameters: return "PoleInDenominatorParameters";
        case ErrorCode::NotSeriesNormalizable: return "NotSeriesNormalizable";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace hyplac
