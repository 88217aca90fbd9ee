#pragma once

#include <stdexcept>
#include <string>

namespace fkm {

enum class ErrorKind {
    InvalidArgument,
    InvalidFamily,
    InvalidVariant,
    DimensionMismatch,
    SamplingFailure,
    NotApplicable,
    DegeneratePair,
    InternalInconsistency,
    MembershipFailure,
    Io,
};

inline const char* to_string(ErrorKind kind);

/// Single exception type for the library; the kind discriminates the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidFamily: return "invalid-family";
    case ErrorKind::InvalidVariant: return "invalid-variant";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::SamplingFailure: return "sampling-failure";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::DegeneratePair: return "degenerate-pair";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::MembershipFailure: return "membership-failure";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace fkm
