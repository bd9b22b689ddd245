#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ainf {

enum class ErrorKind {
    InvalidConfig,
    InvalidArgument,
    SingularPoint,
    TailUnresolved,
    SegmentHitsCenter,
    RayHitsCenter,
    UnknownOrderType,
    InsufficientRange,
    NotChartAdmissible,
    NotOnSection,
    WrongDivisor,
    RootBracketFailure,
    OutsideOverlap,
    NotIsomorphic,
    FixedPointInput,
    NotAxial,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module. The kind is stable and is what the
/// CLI reports; the message carries diagnostics (indices, brackets, bounds).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace ainf
