#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frieze/cartan.hpp"
#include "frieze/checked.hpp"

namespace frieze {

/// The tuple (f(1,m), ..., f(n,m)) of a frieze, or a candidate seed.
/// Entries are positive; the borders a_0 = a_{n+1} = 1 are implicit.
class Diagonal {
public:
    Diagonal() = default;
    /// Throws InvalidInput on an empty tuple or a non-positive entry.
    explicit Diagonal(std::vector<Value> entries);
    Diagonal(std::initializer_list<Value> entries) : Diagonal(std::vector<Value>(entries)) {}

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(entries_.size()); }
    /// 0-based.
    [[nodiscard]] Value operator[](int i) const { return entries_[i]; }
    /// 1-based, with a_0 = a_{n+1} = 1.
    [[nodiscard]] Value with_border(int i) const
    {
        return (i <= 0 || i > rank()) ? 1 : entries_[i - 1];
    }
    [[nodiscard]] std::span<const Value> entries() const noexcept { return entries_; }
    [[nodiscard]] Value max() const;

    auto operator<=>(const Diagonal&) const = default;

private:
    std::vector<Value> entries_;
};

std::string to_string(const Diagonal& d);

/// One period of a frieze: column m is the m-th diagonal. Construction
/// reduces the columns to their minimal cyclic period; column 0 is kept.
class FriezePattern {
public:
    /// Throws InvalidInput if there are no columns or ranks disagree.
    FriezePattern(CartanMatrix cartan, std::vector<Diagonal> columns);

    [[nodiscard]] int rank() const noexcept { return columns_.front().rank(); }
    [[nodiscard]] int period() const noexcept { return static_cast<int>(columns_.size()); }
    [[nodiscard]] const std::vector<Diagonal>& columns() const noexcept { return columns_; }
    [[nodiscard]] const CartanMatrix& cartan() const noexcept { return cartan_; }

    /// f(row, m) with row in 1..rank and any integer m (taken mod period).
    [[nodiscard]] Value operator()(int row, long long m) const;

    /// Equality of (rank, period, columns); the Cartan label is not compared.
    bool operator==(const FriezePattern& other) const { return columns_ == other.columns_; }

private:
    CartanMatrix cartan_;
    std::vector<Diagonal> columns_;
};

/// Smallest p dividing columns.size() with columns[m] == columns[m + p].
int minimal_cyclic_period(std::span<const Diagonal> columns);

struct Failure {
    ErrorKind kind = ErrorKind::InternalInconsistency;
    int index = 0; // row for NonIntegral
};

/// Non-throwing propagation step. On success writes the next diagonal into
/// `out` (size n) and returns nullopt. Rows are solved in ascending order,
/// so row i sees the already-computed next-diagonal entries for rows < i.
std::optional<Failure> try_propagate(const CartanMatrix& m, std::span<const Value> d, std::span<Value> out);

/// Next diagonal under f(i,m) f(i,m+1) = 1 + prod_{j>i} f(j,m)^{-a_ji} prod_{j<i} f(j,m+1)^{-a_ji}.
/// Throws NonIntegral (with the row) or Overflow.
Diagonal propagate(const CartanMatrix& m, const Diagonal& d);

/// Default propagation budget: 4 (n + 3).
int default_period_cap(int rank, int multiplier = 4);

struct BuildResult {
    std::optional<FriezePattern> pattern;
    Failure failure{};
    [[nodiscard]] explicit operator bool() const noexcept { return pattern.has_value(); }
};

BuildResult try_build_frieze(const CartanMatrix& m, const Diagonal& seed, int cap);

/// Propagates from `seed` until it recurs; throws NonIntegral, Overflow or
/// NonPeriodic (no recurrence within `cap` steps).
FriezePattern build_frieze(const CartanMatrix& m, const Diagonal& seed, int cap);
FriezePattern build_frieze(const CartanMatrix& m, const Diagonal& seed);

struct Violation {
    int row = 0;    // 1-based; 0 for shape errors
    int column = 0; // m in 0..p-1
    std::string message;
};

struct CheckReport {
    bool ok = true;
    std::optional<Violation> first_violation;
    [[nodiscard]] explicit operator bool() const noexcept { return ok; }
};

/// Re-verifies the generic recurrence at every (i, m), indices mod period.
CheckReport check_frieze(const CartanMatrix& m, const FriezePattern& candidate);

Value max_value(const FriezePattern& f);

} // namespace frieze
