#include "frieze/diagonals.hpp"

#include <algorithm>
#include <future>

#include "frieze/numbers.hpp"

namespace frieze {

bool satisfies_flute(const Diagonal& t)
{
    for (int i = 1; i <= t.rank(); ++i) {
        if ((t.with_border(i - 1) + t.with_border(i + 1)) % t.with_border(i) != 0) return false;
    }
    return true;
}

std::optional<int> reduction_witness(const Diagonal& t)
{
    if (!satisfies_flute(t)) {
        throw FriezeError(ErrorKind::PreconditionViolated, "tuple " + to_string(t) + " fails the divisibility criterion");
    }
    for (int i = 1; i <= t.rank(); ++i) {
        if (t.with_border(i) == t.with_border(i - 1) + t.with_border(i + 1)) return i;
    }
    return std::nullopt;
}

Diagonal delete_witness(const Diagonal& t, int i)
{
    if (t.rank() < 2) throw FriezeError(ErrorKind::PreconditionViolated, "cannot delete from a rank-1 tuple");
    if (i < 1 || i > t.rank() || !satisfies_flute(t) ||
        t.with_border(i) != t.with_border(i - 1) + t.with_border(i + 1)) {
        throw FriezeError(ErrorKind::PreconditionViolated,
                          "index " + std::to_string(i) + " is not a reduction witness of " + to_string(t));
    }
    std::vector<Value> rest(t.entries().begin(), t.entries().end());
    rest.erase(rest.begin() + (i - 1));
    Diagonal reduced(std::move(rest));
    if (!satisfies_flute(reduced)) {
        throw FriezeError(ErrorKind::InternalInconsistency, "reduced tuple " + to_string(reduced) + " fails the criterion");
    }
    return reduced;
}

Diagonal zigzag_diagonal(int n)
{
    if (n < 1) throw FriezeError(ErrorKind::InvalidRank, "zig-zag diagonal needs n >= 1");
    std::vector<Value> entries;
    for (int k = 4; k < n + 2; k += 2) entries.push_back(fibonacci(k));
    entries.push_back(fibonacci(n + 2));
    const int top_odd = (n + 1) % 2 == 1 ? n + 1 : n;
    for (int k = top_odd; k >= 3; k -= 2) entries.push_back(fibonacci(k));
    Diagonal d(std::move(entries));
    if (d.rank() != n || !satisfies_flute(d) || d.max() != fibonacci(n + 2)) {
        throw FriezeError(ErrorKind::InternalInconsistency, "zig-zag tuple " + to_string(d) + " is malformed");
    }
    return d;
}

namespace {

struct TupleSearch {
    int n;
    Value bound;
    std::vector<Value> prefix;
    std::vector<Diagonal> found;

    void extend(int filled)
    {
        if (filled == n) {
            const Value before = n >= 2 ? prefix[n - 2] : 1;
            if ((before + 1) % prefix[n - 1] == 0) found.emplace_back(prefix);
            return;
        }
        // filled >= 1: the new entry must make a_filled | a_{filled-1} + a_{filled+1}.
        const Value modulus = prefix[filled - 1];
        const Value left = filled >= 2 ? prefix[filled - 2] : 1;
        Value start = (modulus - left % modulus) % modulus;
        if (start == 0) start = modulus;
        for (Value v = start; v <= bound; v += modulus) {
            prefix[filled] = v;
            extend(filled + 1);
        }
    }
};

std::vector<Diagonal> search_from(int n, Value bound, Value first)
{
    TupleSearch s{n, bound, std::vector<Value>(n, 0), {}};
    s.prefix[0] = first;
    s.extend(1);
    return std::move(s.found);
}

} // namespace

std::vector<Diagonal> enumerate_valid_tuples(int n, const EnumerateOptions& options)
{
    if (n < 1) throw FriezeError(ErrorKind::InvalidRank, "rank must be >= 1");
    if (n > options.max_rank) {
        throw FriezeError(ErrorKind::RankTooLarge, "rank " + std::to_string(n) + " exceeds the enumeration limit " +
                                                       std::to_string(options.max_rank));
    }
    const Value bound = fibonacci(n + 2);
    const int jobs = std::max(1, options.jobs);

    std::vector<Diagonal> all;
    if (jobs == 1) {
        for (Value first = 1; first <= bound; ++first) {
            auto part = search_from(n, bound, first);
            all.insert(all.end(), part.begin(), part.end());
        }
    } else {
        std::vector<std::future<std::vector<Diagonal>>> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [=] {
                std::vector<Diagonal> mine;
                for (Value first = 1 + w; first <= bound; first += jobs) {
                    auto part = search_from(n, bound, first);
                    mine.insert(mine.end(), part.begin(), part.end());
                }
                return mine;
            }));
        }
        for (auto& w : workers) {
            auto part = w.get();
            all.insert(all.end(), part.begin(), part.end());
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace frieze
