#pragma once

#include <chrono>
#include <optional>

#include "frieze/cartan.hpp"
#include "frieze/numbers.hpp"

namespace frieze {

/// One cell of the verification matrix: computed frieze count and maximum
/// entry for (family, rank) next to the values they should equal.
struct TheoremReport {
    Family family = Family::A;
    int rank = 0;
    Value frieze_count = 0;
    Value max_entry = 0;
    std::optional<Value> expected_count; // unknown for type C
    Value expected_max = 0;
    bool pass = false;
    std::chrono::milliseconds elapsed{0};
};

struct VerifyOptions {
    int max_rank_a = 8;
    int max_rank_c = 4;
    int jobs = 1;
};

/// Type A: exhaustive tuple enumeration against Catalan(n+1) and F_{n+2}.
/// Type C: folding enumeration against F_{2n+1}, count reported only.
TheoremReport verify_theorem(Family family, int n, const VerifyOptions& options = {});

} // namespace frieze
