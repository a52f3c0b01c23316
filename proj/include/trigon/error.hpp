#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigon {

enum class ErrorCode {
    NonPositiveSide,
    TriangleInequalityViolated,
    SphericalDomainViolated,
    DomainError,
    KindMismatch,
    IndexOutOfRange,
    UnsupportedKind,
    UnsortedSides,
    EmptyIntersection,
    EmptyDomain,
    DivisionByZeroInterval,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// True for the three codes produced by triangle validation.
    bool is_invalid_triangle() const noexcept {
        return code_ == ErrorCode::NonPositiveSide ||
               code_ == ErrorCode::TriangleInequalityViolated ||
               code_ == ErrorCode::SphericalDomainViolated;
    }

private:
    ErrorCode code_;
};

}  // namespace trigon
