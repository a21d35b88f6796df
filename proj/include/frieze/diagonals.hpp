#pragma once

#include <optional>
#include <vector>

#include "frieze/pattern.hpp"

namespace frieze {

/// a_i | a_{i-1} + a_{i+1} for every i, with a_0 = a_{n+1} = 1.
bool satisfies_flute(const Diagonal& t);

/// Smallest 1-based i with a_i = a_{i-1} + a_{i+1}. Throws
/// PreconditionViolated if `t` fails the divisibility criterion.
std::optional<int> reduction_witness(const Diagonal& t);

/// `t` with the entry at witness `i` (1-based) removed; the result again
/// satisfies the criterion. Throws PreconditionViolated if `i` is not a
/// witness of a valid tuple or the tuple has rank 1.
Diagonal delete_witness(const Diagonal& t, int i);

/// The tuple (F_4, F_6, ..., F_{n+2}, ..., F_5, F_3): even-index Fibonacci
/// numbers rising to the peak F_{n+2}, then odd-index ones falling to F_3.
Diagonal zigzag_diagonal(int n);

struct EnumerateOptions {
    int max_rank = 12;
    int jobs = 1;
};

/// Every n-tuple satisfying the criterion, lexicographically ascending.
/// Depth-first: a_{i+1} runs over [1, F_{n+2}] with a_{i+1} = -a_{i-1}
/// (mod a_i); a leaf is kept iff a_n | a_{n-1} + 1. With jobs > 1 the
/// tree is split by a_1 and merged. Throws RankTooLarge above max_rank.
std::vector<Diagonal> enumerate_valid_tuples(int n, const EnumerateOptions& options = {});

} // namespace frieze
