#pragma once

#include "frieze/checked.hpp"

namespace frieze {

/// F_0 = 0, F_1 = 1, F_{k+2} = F_{k+1} + F_k. Overflow past F_92.
Value fibonacci(int k);

/// Exact binomial coefficient; Overflow when the result leaves 64 bits.
Value binomial(int n, int k);

/// C_k = binomial(2k, k) / (k + 1).
Value catalan(int k);

} // namespace frieze
