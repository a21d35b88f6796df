#include "frieze/triangulations.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "frieze/numbers.hpp"

namespace frieze {

PolygonDiagonal PolygonDiagonal::make(int a, int b, int polygon_size)
{
    if (a > b) std::swap(a, b);
    if (a < 1 || b > polygon_size) {
        throw FriezeError(ErrorKind::InvalidInput, "vertex out of range in " + std::to_string(a) + "-" +
                                                       std::to_string(b) + " for a " + std::to_string(polygon_size) +
                                                       "-gon");
    }
    if (b - a < 2 || (a == 1 && b == polygon_size)) {
        throw FriezeError(ErrorKind::InvalidInput,
                          std::to_string(a) + "-" + std::to_string(b) + " is an edge or a point, not a diagonal");
    }
    return {a, b};
}

bool diagonals_intersect(const PolygonDiagonal& d1, const PolygonDiagonal& d2, int /*polygon_size*/)
{
    if (d1 == d2) return true;
    return (d1.i < d2.i && d2.i < d1.j && d1.j < d2.j) || (d2.i < d1.i && d1.i < d2.j && d2.j < d1.j);
}

Triangulation::Triangulation(int polygon_size, std::vector<PolygonDiagonal> diagonals)
    : polygon_size_(polygon_size), diagonals_(std::move(diagonals))
{
    if (polygon_size_ < 4) throw FriezeError(ErrorKind::InvalidInput, "a triangulated polygon needs at least 4 vertices");
    for (auto& d : diagonals_) d = PolygonDiagonal::make(d.i, d.j, polygon_size_);
    std::sort(diagonals_.begin(), diagonals_.end());
    if (static_cast<int>(diagonals_.size()) != polygon_size_ - 3) {
        throw FriezeError(ErrorKind::InvalidInput, "a triangulation of a " + std::to_string(polygon_size_) +
                                                       "-gon has " + std::to_string(polygon_size_ - 3) +
                                                       " diagonals, got " + std::to_string(diagonals_.size()));
    }
    for (std::size_t a = 0; a < diagonals_.size(); ++a) {
        for (std::size_t b = a + 1; b < diagonals_.size(); ++b) {
            if (diagonals_intersect(diagonals_[a], diagonals_[b], polygon_size_)) {
                throw FriezeError(ErrorKind::InvalidInput, "diagonals " + std::to_string(diagonals_[a].i) + "-" +
                                                               std::to_string(diagonals_[a].j) + " and " +
                                                               std::to_string(diagonals_[b].i) + "-" +
                                                               std::to_string(diagonals_[b].j) + " intersect");
            }
        }
    }
}

std::string to_string(const Triangulation& t)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < t.diagonals().size(); ++k) {
        if (k) out << ',';
        out << t.diagonals()[k].i << '-' << t.diagonals()[k].j;
    }
    return out.str();
}

namespace {

using DiagonalSets = std::vector<std::vector<PolygonDiagonal>>;

// Triangulations of the sub-polygon lo, lo+1, ..., hi split at the apex of
// the triangle on base edge lo-hi, memoised on (lo, hi).
class SubPolygonTriangulator {
public:
    explicit SubPolygonTriangulator(int n) : memo_(n + 1, std::vector<std::optional<DiagonalSets>>(n + 1)) {}

    const DiagonalSets& operator()(int lo, int hi)
    {
        auto& slot = memo_[lo][hi];
        if (slot) return *slot;
        DiagonalSets out;
        if (hi - lo < 2) {
            out.emplace_back();
        } else {
            for (int apex = lo + 1; apex < hi; ++apex) {
                const auto& left = (*this)(lo, apex);
                const auto& right = (*this)(apex, hi);
                for (const auto& l : left) {
                    for (const auto& r : right) {
                        std::vector<PolygonDiagonal> set = l;
                        set.insert(set.end(), r.begin(), r.end());
                        if (apex - lo >= 2) set.push_back({lo, apex});
                        if (hi - apex >= 2) set.push_back({apex, hi});
                        out.push_back(std::move(set));
                    }
                }
            }
        }
        slot = std::move(out);
        return *slot;
    }

private:
    std::vector<std::vector<std::optional<DiagonalSets>>> memo_;
};

} // namespace

std::vector<Triangulation> enumerate_triangulations(int polygon_size, int max_polygon)
{
    if (polygon_size < 4) throw FriezeError(ErrorKind::InvalidInput, "polygon size must be >= 4");
    if (polygon_size > max_polygon) {
        throw FriezeError(ErrorKind::RankTooLarge, "polygon size " + std::to_string(polygon_size) +
                                                       " exceeds the enumeration limit " + std::to_string(max_polygon));
    }
    SubPolygonTriangulator triangulate(polygon_size);
    std::vector<Triangulation> result;
    for (const auto& set : triangulate(1, polygon_size)) result.emplace_back(polygon_size, set);
    std::sort(result.begin(), result.end());
    return result;
}

Triangulation zigzag_triangulation(int polygon_size)
{
    if (polygon_size < 4) throw FriezeError(ErrorKind::InvalidInput, "polygon size must be >= 4");
    std::vector<PolygonDiagonal> diagonals{{1, 3}};
    int low = 3;
    int high = polygon_size;
    bool move_high = false;
    while (static_cast<int>(diagonals.size()) < polygon_size - 3) {
        diagonals.push_back({low, high});
        if (move_high) {
            --high;
        } else {
            ++low;
        }
        move_high = !move_high;
    }
    Triangulation t(polygon_size, std::move(diagonals));
    if (polygon_size % 2 == 0 && !is_centrally_symmetric(t)) {
        throw FriezeError(ErrorKind::InternalInconsistency, "zig-zag triangulation is not centrally symmetric");
    }
    return t;
}

bool is_centrally_symmetric(const Triangulation& t)
{
    const int size = t.polygon_size();
    if (size % 2 != 0) {
        throw FriezeError(ErrorKind::OddPolygon, "central symmetry needs an even polygon, got " + std::to_string(size));
    }
    const int half = size / 2;
    const auto image = [&](int v) { return (v - 1 + half) % size + 1; };
    for (const auto& d : t.diagonals()) {
        const auto mapped = PolygonDiagonal::make(image(d.i), image(d.j), size);
        if (!std::binary_search(t.diagonals().begin(), t.diagonals().end(), mapped)) return false;
    }
    return true;
}

std::vector<Value> quiddity(const Triangulation& t)
{
    // A vertex meeting k diagonals sits in k + 1 triangles.
    std::vector<Value> q(t.polygon_size(), 1);
    for (const auto& d : t.diagonals()) {
        ++q[d.i - 1];
        ++q[d.j - 1];
    }
    return q;
}

FriezePattern frieze_from_triangulation(const Triangulation& t)
{
    const int size = t.polygon_size();
    const int n = size - 3;
    // rows[0] is the top border, rows[n + 1] must come out as the bottom one.
    std::vector<std::vector<Value>> rows(n + 2, std::vector<Value>(size, 1));
    rows[1] = quiddity(t);
    for (int i = 1; i <= n; ++i) {
        for (int m = 0; m < size; ++m) {
            const int next = (m + 1) % size;
            const Value numerator = checked_sub(checked_mul(rows[i][m], rows[i][next]), 1);
            const Value divisor = rows[i - 1][next];
            if (numerator <= 0 || numerator % divisor != 0) {
                throw FriezeError(ErrorKind::BijectionFailure, "row " + std::to_string(i + 1) + " is not a positive "
                                                                   "integer at m = " + std::to_string(m) +
                                                                   " for triangulation " + to_string(t));
            }
            rows[i + 1][m] = numerator / divisor;
        }
    }
    for (Value v : rows[n + 1]) {
        if (v != 1) {
            throw FriezeError(ErrorKind::BijectionFailure, "bottom border is not all ones for triangulation " +
                                                               to_string(t));
        }
    }
    std::vector<Diagonal> columns;
    for (int m = 0; m < size; ++m) {
        std::vector<Value> column(n);
        for (int i = 1; i <= n; ++i) column[i - 1] = rows[i][m];
        columns.emplace_back(std::move(column));
    }
    return FriezePattern(CartanMatrix::standard(Family::A, n), std::move(columns));
}

} // namespace frieze
