#include "ainf/error.hpp"

namespace ainf {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::TailUnresolved: return "TailUnresolved";
    case ErrorKind::SegmentHitsCenter: return "SegmentHitsCenter";
    case ErrorKind::RayHitsCenter: return "RayHitsCenter";
    case ErrorKind::UnknownOrderType: return "UnknownOrderType";
    case ErrorKind::InsufficientRange: return "InsufficientRange";
    case ErrorKind::NotChartAdmissible: return "NotChartAdmissible";
    case ErrorKind::NotOnSection: return "NotOnSection";
    case ErrorKind::WrongDivisor: return "WrongDivisor";
    case ErrorKind::RootBracketFailure: return "RootBracketFailure";
    case ErrorKind::OutsideOverlap: return "OutsideOverlap";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::FixedPointInput: return "FixedPointInput";
    case ErrorKind::NotAxial: return "NotAxial";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

}  // namespace ainf
