#pragma once

#include <vector>

#include "frieze/diagonals.hpp"
#include "frieze/pattern.hpp"

namespace frieze {

/// For a frieze `a` of type A_{2n-1}: a(n+j, m) == a(n-j, m+j) for
/// j = 1..n-1 and every m. Throws EvenRank on even rank.
bool is_sigma_symmetric(const FriezePattern& a);

/// C_n frieze c(k, m) = a(k, n - k - m), k = 1..n. The result is checked
/// against the C_n recurrence. Throws NotSymmetric unless
/// is_sigma_symmetric(a).
FriezePattern fold(const FriezePattern& a);

/// Inverse of `fold`: a(k, m) = c(k, n - k - m) on rows 1..n and
/// a(n+j, m) = a(n-j, m+j) below. Throws InternalInconsistency if the
/// result is not a symmetric A_{2n-1} frieze folding back to `c`.
FriezePattern unfold(const FriezePattern& c);

struct FoldOptions {
    int max_rank = 6;   // of C_n
    int jobs = 1;
    bool cross_check = true;
};

/// Every C_n frieze as a function (shifts are distinct), obtained by folding
/// the symmetric A_{2n-1} friezes; sorted by column 0. With cross_check the
/// column set is compared against `direct_search_cn_seeds`.
std::vector<FriezePattern> enumerate_cn_friezes(int n, const FoldOptions& options = {});

/// Seeds of C_n friezes found without folding: depth-first over tuples with
/// entries in [1, F_{2n+1}], pruning on the exactness of the first
/// propagation step, each leaf confirmed by build_frieze. Sorted.
std::vector<Diagonal> direct_search_cn_seeds(int n, int max_rank = 6);

} // namespace frieze
