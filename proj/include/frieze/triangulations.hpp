#pragma once

#include <compare>
#include <string>
#include <vector>

#include "frieze/pattern.hpp"

namespace frieze {

/// Diagonal {i, j} of the N-gon with vertices labelled 1..N cyclically,
/// stored with i < j.
struct PolygonDiagonal {
    int i = 0;
    int j = 0;

    /// Normalises the order; InvalidInput for an edge or out-of-range vertex.
    static PolygonDiagonal make(int a, int b, int polygon_size);

    auto operator<=>(const PolygonDiagonal&) const = default;
};

/// Intersection predicate on diagonals: equal, or strictly interleaved
/// (i1 < j1 < i2 < j2 in the paired order). Sharing an endpoint is not an
/// intersection.
bool diagonals_intersect(const PolygonDiagonal& d1, const PolygonDiagonal& d2, int polygon_size);

class Triangulation {
public:
    /// Sorts the diagonals and validates: N >= 4, exactly N - 3 pairwise
    /// non-intersecting diagonals. Throws InvalidInput otherwise.
    Triangulation(int polygon_size, std::vector<PolygonDiagonal> diagonals);

    [[nodiscard]] int polygon_size() const noexcept { return polygon_size_; }
    [[nodiscard]] const std::vector<PolygonDiagonal>& diagonals() const noexcept { return diagonals_; }

    auto operator<=>(const Triangulation&) const = default;

private:
    int polygon_size_;
    std::vector<PolygonDiagonal> diagonals_;
};

std::string to_string(const Triangulation& t);

/// All triangulations of the N-gon, each sorted, the list sorted. There are
/// Catalan(N - 2) of them. Throws RankTooLarge when N > max_polygon.
std::vector<Triangulation> enumerate_triangulations(int polygon_size, int max_polygon = 14);

/// Snake triangulation: (1,3), (3,N), (4,N), (4,N-1), (5,N-1), ...
Triangulation zigzag_triangulation(int polygon_size);

/// Invariance under i -> i + N/2 (mod N). Throws OddPolygon for odd N.
bool is_centrally_symmetric(const Triangulation& t);

/// Number of triangles at each vertex 1..N.
std::vector<Value> quiddity(const Triangulation& t);

/// Type-A_{N-3} frieze whose first row f(1, m) is the quiddity at vertex
/// m + 1, rows filled by f(i+1,m) = (f(i,m) f(i,m+1) - 1) / f(i-1,m+1).
/// Throws BijectionFailure if a fill step is not a positive integer or the
/// bottom border is not all ones.
FriezePattern frieze_from_triangulation(const Triangulation& t);

} // namespace frieze
