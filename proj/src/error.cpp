#include "frieze/error.hpp"

namespace frieze {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotSymmetrisable: return "NotSymmetrisable";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NonPeriodic: return "NonPeriodic";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::OddPolygon: return "OddPolygon";
    case ErrorKind::EvenRank: return "EvenRank";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BijectionFailure: return "BijectionFailure";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

} // namespace frieze
