#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frieze {

enum class ErrorKind {
    InvalidRank,
    NotGCM,
    NotSymmetrisable,
    NonIntegral,
    Overflow,
    NonPeriodic,
    PreconditionViolated,
    RankTooLarge,
    OddPolygon,
    EvenRank,
    NotSymmetric,
    BijectionFailure,
    InternalInconsistency,
    InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every library operation. `index()` carries the
/// offending row (1-based) for NonIntegral, and is 0 otherwise.
class FriezeError : public std::runtime_error {
public:
    FriezeError(ErrorKind kind, const std::string& what, int index = 0)
        : std::runtime_error(what), kind_(kind), index_(index) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] int index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    int index_;
};

} // namespace frieze
