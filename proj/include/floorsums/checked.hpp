#pragma once
#include <cstdint>
#include <string>
#include "floorsums/errors.hpp"

namespace fsum {

using i64 = int64_t;
using u64 = uint64_t;
using i128 = __int128;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 to_i64(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in 64 bits");
    return static_cast<i64>(v);
}

// Floor division, rounding toward minus infinity.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline i64 ceil_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

// Exact integer square root of a nonnegative value.
i64 isqrt_i64(i64 n);

std::string i128_str(i128 v);

} // namespace fsum
