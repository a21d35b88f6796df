#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Tuple = std::vector<Int>;

// The A_5 frieze seeded by (2,5,13,8,3), columns m = 0..3.
inline const std::vector<Tuple> kExampleA5 = {
    {2, 5, 13, 8, 3}, {3, 8, 5, 2, 1}, {3, 2, 1, 1, 2}, {1, 1, 2, 5, 3}};
// The rows as printed, m = 0..5.
inline const std::vector<Tuple> kExampleA5Rows = {
    {2, 3, 3, 1, 2, 3}, {5, 8, 2, 1, 5, 8}, {13, 5, 1, 2, 13, 5}, {8, 2, 1, 5, 8, 2}, {3, 1, 2, 3, 3, 1}};
// The folded C_3 frieze, rows as printed (m = 0..6).
inline const std::vector<Tuple> kExampleC3Rows = {
    {3, 3, 2, 1, 3, 3, 2}, {8, 5, 1, 2, 8, 5, 1}, {13, 2, 1, 5, 13, 2, 1}};
// A_2 pentagon frieze rows as printed, first diagonal (1, 2).
inline const std::vector<Tuple> kPentagonRows = {{1, 3, 1, 2, 2, 1}, {2, 2, 1, 3, 1, 2}};

inline Int fib(int k)
{
    Int a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        const Int c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// Segner recurrence C_{k+1} = sum C_i C_{k-i}.
inline Int catalan_segner(int k)
{
    std::vector<Int> c(k + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= k; ++m) {
        for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    }
    return c[k];
}

// Pascal's triangle.
inline Int binomial_pascal(int n, int k)
{
    std::vector<std::vector<Int>> t(n + 1);
    for (int i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return (k < 0 || k > n) ? 0 : t[n][k];
}

inline bool flute(const Tuple& t)
{
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        const Int left = i == 0 ? 1 : t[i - 1];
        const Int right = i == n - 1 ? 1 : t[i + 1];
        if ((left + right) % t[i] != 0) return false;
    }
    return true;
}

// All tuples in [1, bound]^n, lexicographic.
template <class Visit>
void hypercube(int n, Int bound, Visit&& visit)
{
    Tuple t(n, 1);
    while (true) {
        visit(t);
        int k = n - 1;
        while (k >= 0 && t[k] == bound) t[k--] = 1;
        if (k < 0) return;
        ++t[k];
    }
}

inline std::vector<Tuple> flute_tuples_brute_force(int n)
{
    std::vector<Tuple> out;
    hypercube(n, fib(n + 2), [&](const Tuple& t) {
        if (flute(t)) out.push_back(t);
    });
    return out;
}

// Diamond rule solved directly: d'_i = (1 + d_{i+1} d'_{i-1}) / d_i.
inline std::optional<Tuple> diamond_step(const Tuple& d)
{
    const int n = static_cast<int>(d.size());
    Tuple next(n);
    for (int i = 0; i < n; ++i) {
        const Int below = i + 1 < n ? d[i + 1] : 1;
        const Int left = i > 0 ? next[i - 1] : 1;
        const Int num = 1 + below * left;
        if (num % d[i]) return std::nullopt;
        next[i] = num / d[i];
    }
    return next;
}

// Two-case C_n rule: diamond for i < n, 1 + (f(n-1, m+1))^2 at i = n.
inline std::optional<Tuple> cn_step(const Tuple& d)
{
    const int n = static_cast<int>(d.size());
    Tuple next(n);
    for (int i = 0; i < n; ++i) {
        Int num;
        if (i == n - 1) {
            const Int left = n >= 2 ? next[n - 2] : 1;
            num = 1 + left * left;
        } else {
            num = 1 + d[i + 1] * (i > 0 ? next[i - 1] : 1);
        }
        if (num % d[i]) return std::nullopt;
        next[i] = num / d[i];
    }
    return next;
}

// Leibniz determinant of the leading k x k block.
inline Int leibniz_minor(const std::vector<std::vector<Int>>& m, int k)
{
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    do {
        Int term = 1;
        int inversions = 0;
        for (int i = 0; i < k; ++i) {
            term *= m[i][perm[i]];
            for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
        }
        total += (inversions % 2 ? -term : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Least D in [1, bound]^n (by sum, then lexicographic) with DM symmetric.
inline std::optional<Tuple> symmetriser_brute_force(const std::vector<std::vector<Int>>& m, Int bound)
{
    const int n = static_cast<int>(m.size());
    std::optional<Tuple> best;
    Int best_sum = 0;
    hypercube(n, bound, [&](const Tuple& d) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (d[i] * m[i][j] != d[j] * m[j][i]) return;
            }
        }
        const Int s = std::accumulate(d.begin(), d.end(), Int{0});
        if (!best || s < best_sum) {
            best = d;
            best_sum = s;
        }
    });
    return best;
}

// Chords {a,b}, {c,d} of a convex polygon with four distinct endpoints cross
// iff exactly one of c, d lies strictly between a and b.
inline bool chords_cross(std::pair<int, int> x, std::pair<int, int> y)
{
    const auto between = [](int lo, int v, int hi) { return lo < v && v < hi; };
    if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second) return false;
    return between(x.first, y.first, x.second) != between(x.first, y.second, x.second);
}

using DiagonalSet = std::vector<std::pair<int, int>>;

// Every (N-3)-subset of diagonals with no two crossing, sorted.
inline std::vector<DiagonalSet> triangulations_brute_force(int N)
{
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 2; j <= N; ++j) {
            if (!(i == 1 && j == N)) all.emplace_back(i, j);
        }
    }
    std::vector<DiagonalSet> out;
    DiagonalSet chosen;
    const int want = N - 3;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(chosen.size()) == want) {
            out.push_back(chosen);
            return;
        }
        for (std::size_t k = from; k < all.size(); ++k) {
            bool ok = true;
            for (const auto& c : chosen) ok = ok && !chords_cross(c, all[k]);
            if (!ok) continue;
            chosen.push_back(all[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Triangle counts from explicit triangles: triples whose sides are all
// polygon edges or chosen diagonals.
inline Tuple quiddity_from_triangles(int N, const DiagonalSet& diagonals)
{
    std::set<std::pair<int, int>> sides(diagonals.begin(), diagonals.end());
    for (int v = 1; v < N; ++v) sides.insert({v, v + 1});
    sides.insert({1, N});
    Tuple q(N, 0);
    for (int a = 1; a <= N; ++a) {
        for (int b = a + 1; b <= N; ++b) {
            for (int c = b + 1; c <= N; ++c) {
                if (sides.count({a, b}) && sides.count({b, c}) && sides.count({a, c})) {
                    ++q[a - 1];
                    ++q[b - 1];
                    ++q[c - 1];
                }
            }
        }
    }
    return q;
}

} // namespace oracle
