#include "ordhyp/error.hpp"

namespace ordhyp {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateProjection: return "DuplicateProjection";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::DegenerateSubset: return "DegenerateSubset";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::AlphasNotDistinct: return "AlphasNotDistinct";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedBackend: return "UnsupportedBackend";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message)
    , kind_(kind)
    , witness_(std::move(witness))
{
}

} // namespace ordhyp
