#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frieze/checked.hpp"

namespace frieze {

enum class Family { A, C, Other };

std::string to_string(Family family);
/// Parses "A" or "C" (case-insensitive); throws InvalidInput otherwise.
Family parse_family(const std::string& text);

using IntMatrix = std::vector<std::vector<Value>>;

/// Square integer matrix with 2 on the diagonal, non-positive off-diagonal
/// entries and a symmetric zero pattern. Symmetrisability is not part of
/// construction; query it with `symmetriser`.
class CartanMatrix {
public:
    /// Throws NotGCM if `entries` is not square or violates the GCM shape.
    explicit CartanMatrix(IntMatrix entries, Family family = Family::Other);

    /// A_n for rank >= 1, C_n for rank >= 2; InvalidRank otherwise.
    static CartanMatrix standard(Family family, int rank);

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(entries_.size()); }
    [[nodiscard]] Family family() const noexcept { return family_; }
    /// 0-based access.
    [[nodiscard]] Value operator()(int row, int col) const { return entries_[row][col]; }
    [[nodiscard]] const IntMatrix& entries() const noexcept { return entries_; }

    bool operator==(const CartanMatrix&) const = default;

private:
    IntMatrix entries_;
    Family family_;
};

/// Throws NotGCM describing the first violated condition, if any.
void require_gcm_shape(const IntMatrix& m);

/// Componentwise-least positive integer diagonal D with D*M symmetric, or
/// nullopt. Each connected component of the Coxeter graph is normalised
/// independently.
std::optional<std::vector<Value>> symmetriser(const IntMatrix& m);
std::optional<std::vector<Value>> symmetriser(const CartanMatrix& m);

/// D*M with D = symmetriser(M); NotSymmetrisable if none exists.
IntMatrix symmetrisation(const CartanMatrix& m);

/// Leading principal minors of a square integer matrix by fraction-free
/// (Bareiss) elimination. Stops after the first zero minor.
std::vector<Value> leading_principal_minors(const IntMatrix& m);

bool is_finite_type(const CartanMatrix& m);
bool is_indecomposable(const CartanMatrix& m);

} // namespace frieze
