#pragma once

#include <cstdint>
#include <limits>

#include "ssp/errors.hpp"

namespace ssp {

using Int = std::int64_t;

/// All instance data lives in [-2^62, 2^62) so that any single add of two
/// in-range values is representable before the check fires.
inline constexpr Int kIntLimit = Int{1} << 62;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r) || r >= kIntLimit || r < -kIntLimit)
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r) || r >= kIntLimit || r < -kIntLimit)
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r) || r >= kIntLimit || r < -kIntLimit)
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline void require_in_range(Int v, const char* what) {
    if (v >= kIntLimit || v < -kIntLimit)
        throw OverflowError(std::string("value out of range: ") + what);
}

}  // namespace ssp
