#pragma once

#include <stdexcept>
#include <string>

namespace reflect3 {

enum class ErrorCode {
    InvalidArgument,
    CoincidentPoints,
    CollinearPoints,
    ParallelPlanes,
    NotCongruent,
    DegenerateSource,
    NotAFixedPoint,
    ProbeExhausted,
    ParallelDistinctMirrors,
    InvalidClassParameters,
    NotOrthogonal,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::ParallelPlanes: return "ParallelPlanes";
    case ErrorCode::NotCongruent: return "NotCongruent";
    case ErrorCode::DegenerateSource: return "DegenerateSource";
    case ErrorCode::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorCode::ProbeExhausted: return "ProbeExhausted";
    case ErrorCode::ParallelDistinctMirrors: return "ParallelDistinctMirrors";
    case ErrorCode::InvalidClassParameters: return "InvalidClassParameters";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    }
    return "Unknown";
}

/// Thrown by every operation whose precondition fails. `code()` identifies the
/// failed condition so callers (the CLI in particular) can map it to an exit
/// status without parsing messages.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace reflect3
