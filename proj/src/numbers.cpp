#include "frieze/numbers.hpp"

#include <limits>
#include <string>

namespace frieze {

Value fibonacci(int k)
{
    if (k < 0) throw FriezeError(ErrorKind::InvalidInput, "fibonacci index must be non-negative");
    Value prev = 0;
    Value cur = 1;
    if (k == 0) return 0;
    for (int i = 1; i < k; ++i) {
        const Value next = checked_add(prev, cur);
        prev = cur;
        cur = next;
    }
    return cur;
}

Value binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // r_i = binomial(n - k + i, i) stays integral at every step.
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<Value>::max()) {
            throw FriezeError(ErrorKind::Overflow, "binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                                       ") exceeds 64 bits");
        }
    }
    return static_cast<Value>(r);
}

Value catalan(int k)
{
    if (k < 0) throw FriezeError(ErrorKind::InvalidInput, "catalan index must be non-negative");
    return binomial(2 * k, k) / (k + 1);
}

} // namespace frieze
