#include "frieze/folding.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "frieze/numbers.hpp"

namespace frieze {

namespace {

int folded_rank(const FriezePattern& a)
{
    if (a.rank() % 2 == 0) {
        throw FriezeError(ErrorKind::EvenRank, "folding needs odd rank 2n-1, got " + std::to_string(a.rank()));
    }
    return (a.rank() + 1) / 2;
}

void require_rank_limit(int n, int max_rank)
{
    if (n < 2) throw FriezeError(ErrorKind::InvalidRank, "type C needs rank >= 2");
    if (n > max_rank) {
        throw FriezeError(ErrorKind::RankTooLarge,
                          "rank " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(max_rank));
    }
}

} // namespace

bool is_sigma_symmetric(const FriezePattern& a)
{
    const int n = folded_rank(a);
    for (int m = 0; m < a.period(); ++m) {
        for (int j = 1; j < n; ++j) {
            if (a(n + j, m) != a(n - j, m + j)) return false;
        }
    }
    return true;
}

FriezePattern fold(const FriezePattern& a)
{
    const int n = folded_rank(a);
    if (n < 2) throw FriezeError(ErrorKind::InvalidRank, "type C needs rank >= 2; A_1 does not fold");
    if (!is_sigma_symmetric(a)) throw FriezeError(ErrorKind::NotSymmetric, "frieze is not sigma-symmetric");
    std::vector<Diagonal> columns;
    for (int m = 0; m < a.period(); ++m) {
        std::vector<Value> column(n);
        for (int k = 1; k <= n; ++k) column[k - 1] = a(k, static_cast<long long>(n) - k - m);
        columns.emplace_back(std::move(column));
    }
    const auto cn = CartanMatrix::standard(Family::C, n);
    FriezePattern c(cn, std::move(columns));
    if (auto report = check_frieze(cn, c); !report) {
        throw FriezeError(ErrorKind::InternalInconsistency, "folded frieze violates the C_n rule: " +
                                                                report.first_violation->message);
    }
    return c;
}

FriezePattern unfold(const FriezePattern& c)
{
    const int n = c.rank();
    if (n < 2) throw FriezeError(ErrorKind::InvalidRank, "type C needs rank >= 2");
    std::vector<Diagonal> columns;
    for (int m = 0; m < c.period(); ++m) {
        std::vector<Value> column(2 * n - 1);
        for (int k = 1; k <= n; ++k) column[k - 1] = c(k, static_cast<long long>(n) - k - m);
        // a(n+j, m) = a(n-j, m+j) = c(n-j, -m)
        for (int j = 1; j < n; ++j) column[n + j - 1] = c(n - j, -static_cast<long long>(m));
        columns.emplace_back(std::move(column));
    }
    const auto an = CartanMatrix::standard(Family::A, 2 * n - 1);
    FriezePattern a(an, std::move(columns));
    if (auto report = check_frieze(an, a); !report) {
        throw FriezeError(ErrorKind::InternalInconsistency, "unfolded frieze violates the A rule: " +
                                                                report.first_violation->message);
    }
    if (!is_sigma_symmetric(a) || !(fold(a) == c)) {
        throw FriezeError(ErrorKind::InternalInconsistency, "unfold does not invert fold");
    }
    return a;
}

namespace {

std::vector<FriezePattern> fold_symmetric(const std::vector<Diagonal>& seeds, std::size_t begin, std::size_t stride)
{
    std::vector<FriezePattern> out;
    if (seeds.empty()) return out;
    const auto an = CartanMatrix::standard(Family::A, seeds.front().rank());
    for (std::size_t k = begin; k < seeds.size(); k += stride) {
        const auto a = build_frieze(an, seeds[k]);
        if (is_sigma_symmetric(a)) out.push_back(fold(a));
    }
    return out;
}

} // namespace

std::vector<FriezePattern> enumerate_cn_friezes(int n, const FoldOptions& options)
{
    require_rank_limit(n, options.max_rank);
    const auto seeds = enumerate_valid_tuples(2 * n - 1, {std::max(2 * n - 1, 1), options.jobs});
    const int jobs = std::max(1, options.jobs);

    std::vector<FriezePattern> folded;
    if (jobs == 1) {
        folded = fold_symmetric(seeds, 0, 1);
    } else {
        std::vector<std::future<std::vector<FriezePattern>>> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&seeds, w, jobs] {
                return fold_symmetric(seeds, static_cast<std::size_t>(w), static_cast<std::size_t>(jobs));
            }));
        }
        for (auto& w : workers) {
            auto part = w.get();
            folded.insert(folded.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }

    // Friezes are determined by column 0, so it is the dedup and sort key.
    std::sort(folded.begin(), folded.end(),
              [](const FriezePattern& x, const FriezePattern& y) { return x.columns() < y.columns(); });
    folded.erase(std::unique(folded.begin(), folded.end()), folded.end());

    const auto cn = CartanMatrix::standard(Family::C, n);
    for (const auto& c : folded) {
        if (!check_frieze(cn, c)) throw FriezeError(ErrorKind::InternalInconsistency, "folded frieze fails the C_n rule");
    }
    if (options.cross_check) {
        std::set<Diagonal> columns;
        for (const auto& c : folded) columns.insert(c.columns().begin(), c.columns().end());
        for (const auto& seed : direct_search_cn_seeds(n, options.max_rank)) {
            if (!columns.contains(seed)) {
                throw FriezeError(ErrorKind::InternalInconsistency,
                                  "direct search found C_n seed " + to_string(seed) + " missing from the folding");
            }
        }
    }
    return folded;
}

namespace {

struct CnSeedSearch {
    const CartanMatrix& cn;
    Value bound;
    std::vector<Value> seed;
    std::vector<Value> next;
    std::vector<Diagonal> found;

    // Row i of the next diagonal only needs seed[0..i+1] and next[0..i-1],
    // so row i is solved as soon as seed[i+1] is fixed.
    bool row_is_exact(int i)
    {
        const int n = cn.rank();
        Value product = 1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const Value e = -cn(j, i);
            if (e == 0) continue;
            product = checked_mul(product, checked_pow(j > i ? seed[j] : next[j], e));
        }
        const Value numerator = checked_add(product, 1);
        if (numerator % seed[i] != 0) return false;
        next[i] = numerator / seed[i];
        return true;
    }

    void extend(int filled)
    {
        const int n = cn.rank();
        if (filled >= 2 && !row_is_exact(filled - 2)) return;
        if (filled == n) {
            if (!row_is_exact(n - 1)) return;
            Diagonal d(seed);
            if (try_build_frieze(cn, d, default_period_cap(n))) found.push_back(std::move(d));
            return;
        }
        for (Value v = 1; v <= bound; ++v) {
            seed[filled] = v;
            extend(filled + 1);
        }
    }
};

} // namespace

std::vector<Diagonal> direct_search_cn_seeds(int n, int max_rank)
{
    require_rank_limit(n, max_rank);
    const auto cn = CartanMatrix::standard(Family::C, n);
    CnSeedSearch search{cn, fibonacci(2 * n + 1), std::vector<Value>(n, 0), std::vector<Value>(n, 0), {}};
    search.extend(0);
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

} // namespace frieze
