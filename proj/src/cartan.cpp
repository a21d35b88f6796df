#include "frieze/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace frieze {

std::string to_string(Family family)
{
    switch (family) {
    case Family::A: return "A";
    case Family::C: return "C";
    case Family::Other: return "other";
    }
    return "other";
}

Family parse_family(const std::string& text)
{
    if (text.size() == 1) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        if (c == 'A') return Family::A;
        if (c == 'C') return Family::C;
    }
    throw FriezeError(ErrorKind::InvalidInput, "unknown family '" + text + "' (expected A or C)");
}

void require_gcm_shape(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0) throw FriezeError(ErrorKind::NotGCM, "matrix is empty");
    for (const auto& row : m) {
        if (row.size() != n) throw FriezeError(ErrorKind::NotGCM, "matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] != 2) {
            throw FriezeError(ErrorKind::NotGCM, "diagonal entry " + std::to_string(i + 1) + " is not 2");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) {
                throw FriezeError(ErrorKind::NotGCM, "off-diagonal entry (" + std::to_string(i + 1) + "," +
                                                         std::to_string(j + 1) + ") is positive");
            }
            if ((m[i][j] == 0) != (m[j][i] == 0)) {
                throw FriezeError(ErrorKind::NotGCM, "zero pattern is not symmetric at (" + std::to_string(i + 1) +
                                                         "," + std::to_string(j + 1) + ")");
            }
        }
    }
}

CartanMatrix::CartanMatrix(IntMatrix entries, Family family) : entries_(std::move(entries)), family_(family)
{
    require_gcm_shape(entries_);
}

CartanMatrix CartanMatrix::standard(Family family, int rank)
{
    if (family == Family::Other) throw FriezeError(ErrorKind::InvalidInput, "no standard matrix for family 'other'");
    const int min_rank = family == Family::A ? 1 : 2;
    if (rank < min_rank) {
        throw FriezeError(ErrorKind::InvalidRank, "rank " + std::to_string(rank) + " out of range for type " +
                                                      to_string(family) + " (minimum " + std::to_string(min_rank) + ")");
    }
    IntMatrix e(rank, std::vector<Value>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        e[i][i] = 2;
        if (i + 1 < rank) {
            e[i][i + 1] = -1;
            e[i + 1][i] = -1;
        }
    }
    if (family == Family::C) e[rank - 2][rank - 1] = -2;
    return CartanMatrix(std::move(e), family);
}

namespace {

struct Ratio {
    Value num;
    Value den;
};

Ratio reduced(Value num, Value den)
{
    const Value g = std::gcd(num, den);
    return {num / g, den / g};
}

} // namespace

std::optional<std::vector<Value>> symmetriser(const IntMatrix& m)
{
    require_gcm_shape(m);
    const int n = static_cast<int>(m.size());
    std::vector<std::optional<Ratio>> d(n);
    std::vector<Value> result(n, 0);

    for (int root = 0; root < n; ++root) {
        if (d[root]) continue;
        // Ratios d_j/d_root over one component, spread along a BFS tree.
        std::vector<int> component;
        std::queue<int> pending;
        d[root] = Ratio{1, 1};
        pending.push(root);
        while (!pending.empty()) {
            const int i = pending.front();
            pending.pop();
            component.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (j == i || m[i][j] == 0) continue;
                // d_i * a_ij = d_j * a_ji
                const Ratio want = reduced(checked_mul(d[i]->num, -m[i][j]), checked_mul(d[i]->den, -m[j][i]));
                if (!d[j]) {
                    d[j] = want;
                    pending.push(j);
                } else if (d[j]->num != want.num || d[j]->den != want.den) {
                    return std::nullopt;
                }
            }
        }
        Value lcm_den = 1;
        for (int i : component) lcm_den = checked_mul(lcm_den / std::gcd(lcm_den, d[i]->den), d[i]->den);
        Value gcd_num = 0;
        for (int i : component) {
            result[i] = checked_mul(d[i]->num, lcm_den / d[i]->den);
            gcd_num = std::gcd(gcd_num, result[i]);
        }
        for (int i : component) result[i] /= gcd_num;
    }
    return result;
}

std::optional<std::vector<Value>> symmetriser(const CartanMatrix& m) { return symmetriser(m.entries()); }

IntMatrix symmetrisation(const CartanMatrix& m)
{
    const auto d = symmetriser(m);
    if (!d) throw FriezeError(ErrorKind::NotSymmetrisable, "matrix admits no symmetriser");
    IntMatrix s = m.entries();
    for (int i = 0; i < m.rank(); ++i) {
        for (auto& x : s[i]) x = checked_mul(x, (*d)[i]);
    }
    return s;
}

std::vector<Value> leading_principal_minors(const IntMatrix& m)
{
    const std::size_t n = m.size();
    IntMatrix a = m;
    std::vector<Value> minors;
    Value prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(a[k][k]);
        if (a[k][k] == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact by Sylvester's identity
                a[i][j] = checked_sub(checked_mul(a[k][k], a[i][j]), checked_mul(a[i][k], a[k][j])) / prev;
            }
        }
        prev = a[k][k];
    }
    return minors;
}

bool is_finite_type(const CartanMatrix& m)
{
    const auto minors = leading_principal_minors(symmetrisation(m));
    if (static_cast<int>(minors.size()) < m.rank()) return false;
    return std::all_of(minors.begin(), minors.end(), [](Value v) { return v > 0; });
}

bool is_indecomposable(const CartanMatrix& m)
{
    const int n = m.rank();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (!seen[j] && m(i, j) != 0) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == n;
}

} // namespace frieze
