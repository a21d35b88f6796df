#include "frieze/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace frieze {

Diagonal::Diagonal(std::vector<Value> entries) : entries_(std::move(entries))
{
    if (entries_.empty()) throw FriezeError(ErrorKind::InvalidInput, "diagonal must have at least one entry");
    for (Value v : entries_) {
        if (v < 1) throw FriezeError(ErrorKind::InvalidInput, "diagonal entries must be positive, got " + std::to_string(v));
    }
}

Value Diagonal::max() const { return *std::max_element(entries_.begin(), entries_.end()); }

std::string to_string(const Diagonal& d)
{
    std::ostringstream out;
    for (int i = 0; i < d.rank(); ++i) {
        if (i) out << ',';
        out << d[i];
    }
    return out.str();
}

int minimal_cyclic_period(std::span<const Diagonal> columns)
{
    const int n = static_cast<int>(columns.size());
    for (int p = 1; p < n; ++p) {
        if (n % p) continue;
        bool repeats = true;
        for (int m = 0; m + p < n && repeats; ++m) repeats = columns[m] == columns[m + p];
        if (repeats) return p;
    }
    return n;
}

FriezePattern::FriezePattern(CartanMatrix cartan, std::vector<Diagonal> columns)
    : cartan_(std::move(cartan)), columns_(std::move(columns))
{
    if (columns_.empty()) throw FriezeError(ErrorKind::InvalidInput, "frieze needs at least one column");
    for (const auto& c : columns_) {
        if (c.rank() != columns_.front().rank()) {
            throw FriezeError(ErrorKind::InvalidInput, "columns of a frieze must share one rank");
        }
    }
    if (cartan_.rank() != rank()) {
        throw FriezeError(ErrorKind::InvalidInput, "Cartan matrix rank " + std::to_string(cartan_.rank()) +
                                                       " does not match column rank " + std::to_string(rank()));
    }
    columns_.resize(minimal_cyclic_period(columns_));
}

Value FriezePattern::operator()(int row, long long m) const
{
    const long long p = period();
    const long long k = ((m % p) + p) % p;
    return columns_[static_cast<std::size_t>(k)][row - 1];
}

namespace {

// 1 + prod_{j>i} d_j^{-a_ji} * prod_{j<i} next_j^{-a_ji}, 0-based i.
Value recurrence_rhs(const CartanMatrix& m, int i, std::span<const Value> d, std::span<const Value> next)
{
    Value product = 1;
    for (int j = 0; j < m.rank(); ++j) {
        if (j == i) continue;
        const Value e = -m(j, i);
        if (e == 0) continue;
        product = checked_mul(product, checked_pow(j > i ? d[j] : next[j], e));
    }
    return checked_add(product, 1);
}

} // namespace

std::optional<Failure> try_propagate(const CartanMatrix& m, std::span<const Value> d, std::span<Value> out)
{
    try {
        for (int i = 0; i < m.rank(); ++i) {
            const Value numerator = recurrence_rhs(m, i, d, out);
            if (numerator % d[i] != 0) return Failure{ErrorKind::NonIntegral, i + 1};
            out[i] = numerator / d[i];
        }
    } catch (const FriezeError& e) {
        return Failure{e.kind(), 0};
    }
    return std::nullopt;
}

namespace {

[[noreturn]] void raise(const Failure& f, const std::string& context)
{
    if (f.kind == ErrorKind::NonIntegral) {
        throw FriezeError(ErrorKind::NonIntegral,
                          context + ": division not exact at row " + std::to_string(f.index), f.index);
    }
    if (f.kind == ErrorKind::NonPeriodic) throw FriezeError(f.kind, context + ": no recurrence within the period cap");
    throw FriezeError(f.kind, context + ": " + std::string(to_string(f.kind)));
}

void require_rank(const CartanMatrix& m, const Diagonal& d)
{
    if (m.rank() != d.rank()) {
        throw FriezeError(ErrorKind::InvalidInput, "diagonal rank " + std::to_string(d.rank()) +
                                                       " does not match Cartan rank " + std::to_string(m.rank()));
    }
}

} // namespace

Diagonal propagate(const CartanMatrix& m, const Diagonal& d)
{
    require_rank(m, d);
    std::vector<Value> next(d.rank());
    if (auto failure = try_propagate(m, d.entries(), next)) raise(*failure, "propagate " + to_string(d));
    return Diagonal(std::move(next));
}

int default_period_cap(int rank, int multiplier) { return multiplier * (rank + 3); }

BuildResult try_build_frieze(const CartanMatrix& m, const Diagonal& seed, int cap)
{
    require_rank(m, seed);
    std::vector<Diagonal> columns{seed};
    std::vector<Value> next(seed.rank());
    for (int step = 0; step < cap; ++step) {
        if (auto failure = try_propagate(m, columns.back().entries(), next)) return {std::nullopt, *failure};
        if (std::equal(next.begin(), next.end(), seed.entries().begin())) {
            return {FriezePattern(m, std::move(columns)), {}};
        }
        columns.emplace_back(next);
    }
    return {std::nullopt, Failure{ErrorKind::NonPeriodic, 0}};
}

FriezePattern build_frieze(const CartanMatrix& m, const Diagonal& seed, int cap)
{
    auto result = try_build_frieze(m, seed, cap);
    if (!result) raise(result.failure, "build from " + to_string(seed));
    return std::move(*result.pattern);
}

FriezePattern build_frieze(const CartanMatrix& m, const Diagonal& seed)
{
    return build_frieze(m, seed, default_period_cap(m.rank()));
}

CheckReport check_frieze(const CartanMatrix& m, const FriezePattern& candidate)
{
    if (m.rank() != candidate.rank()) {
        return {false, Violation{0, 0, "rank " + std::to_string(candidate.rank()) + " does not match Cartan rank " +
                                           std::to_string(m.rank())}};
    }
    const int p = candidate.period();
    for (int col = 0; col < p; ++col) {
        const auto& d = candidate.columns()[col];
        const auto& next = candidate.columns()[(col + 1) % p];
        for (int i = 0; i < m.rank(); ++i) {
            try {
                const Value lhs = checked_mul(d[i], next[i]);
                const Value rhs = recurrence_rhs(m, i, d.entries(), next.entries());
                if (lhs != rhs) {
                    return {false, Violation{i + 1, col,
                                             "f(" + std::to_string(i + 1) + "," + std::to_string(col) + ")*f(" +
                                                 std::to_string(i + 1) + "," + std::to_string(col + 1) +
                                                 ") = " + std::to_string(lhs) + " but the recurrence requires " +
                                                 std::to_string(rhs)}};
                }
            } catch (const FriezeError&) {
                return {false, Violation{i + 1, col, "overflow while evaluating the recurrence"}};
            }
        }
    }
    return {};
}

Value max_value(const FriezePattern& f)
{
    Value best = 0;
    for (const auto& c : f.columns()) best = std::max(best, c.max());
    return best;
}

} // namespace frieze
