#pragma once

#include <cstdint>
#include <limits>

#include "frieze/error.hpp"

namespace frieze {

/// Entry type for every frieze, diagonal and matrix in the library.
using Value = std::int64_t;

[[nodiscard]] inline Value checked_add(Value a, Value b)
{
    Value r;
    if (__builtin_add_overflow(a, b, &r)) throw FriezeError(ErrorKind::Overflow, "integer overflow in addition");
    return r;
}

[[nodiscard]] inline Value checked_sub(Value a, Value b)
{
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw FriezeError(ErrorKind::Overflow, "integer overflow in subtraction");
    return r;
}

[[nodiscard]] inline Value checked_mul(Value a, Value b)
{
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw FriezeError(ErrorKind::Overflow, "integer overflow in multiplication");
    return r;
}

// exponent >= 0
[[nodiscard]] inline Value checked_pow(Value base, Value exponent)
{
    Value r = 1;
    while (exponent > 0) {
        if (exponent & 1) r = checked_mul(r, base);
        exponent >>= 1;
        if (exponent > 0) base = checked_mul(base, base);
    }
    return r;
}

} // namespace frieze
