#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordhyp {

enum class ErrorKind {
    RankDeficient,
    ZeroVector,
    DimensionMismatch,
    Degenerate,
    SingularMap,
    IndexOutOfRange,
    DuplicateProjection,
    DuplicatePoint,
    DegenerateSubset,
    IllConditioned,
    UnsupportedSize,
    UnsupportedDimension,
    NotOdd,
    AlphasNotDistinct,
    SearchTooLarge,
    ParseError,
    UnsupportedBackend,
    VerificationFailure,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. `witness` carries point indices
/// (a degenerate subset, a duplicate pair, ...) where one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<std::size_t> witness_;
};

} // namespace ordhyp
