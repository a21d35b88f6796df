#include "frieze/theorems.hpp"

#include <algorithm>

#include "frieze/diagonals.hpp"
#include "frieze/folding.hpp"

namespace frieze {

TheoremReport verify_theorem(Family family, int n, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    TheoremReport report;
    report.family = family;
    report.rank = n;

    switch (family) {
    case Family::A: {
        const auto tuples = enumerate_valid_tuples(n, {options.max_rank_a, options.jobs});
        report.frieze_count = static_cast<Value>(tuples.size());
        for (const auto& t : tuples) report.max_entry = std::max(report.max_entry, t.max());
        report.expected_count = catalan(n + 1);
        report.expected_max = fibonacci(n + 2);
        break;
    }
    case Family::C: {
        const auto friezes = enumerate_cn_friezes(n, {options.max_rank_c, options.jobs, true});
        report.frieze_count = static_cast<Value>(friezes.size());
        for (const auto& c : friezes) report.max_entry = std::max(report.max_entry, max_value(c));
        report.expected_max = fibonacci(2 * n + 1);
        break;
    }
    case Family::Other:
        throw FriezeError(ErrorKind::InvalidInput, "verification covers types A and C only");
    }

    report.pass = report.max_entry == report.expected_max &&
                  (!report.expected_count || *report.expected_count == report.frieze_count);
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace frieze
