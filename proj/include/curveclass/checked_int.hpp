#pragma once

#include <cstdint>
#include <string>

#include "curveclass/errors.hpp"

namespace curveclass {

// Exact int64 arithmetic with overflow detection. Every quantity in the
// lattice layer is a small integer, but enumeration intermediates can grow,
// so all arithmetic funnels through these.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

inline std::int64_t checked_abs(std::int64_t a) {
    return a < 0 ? checked_neg(a) : a;
}

// a^n for n >= 0.
inline std::int64_t checked_pow(std::int64_t a, std::int64_t n) {
    if (n < 0) throw ArithmeticError("negative exponent");
    std::int64_t result = 1;
    std::int64_t base = a;
    while (n > 0) {
        if (n & 1) result = checked_mul(result, base);
        n >>= 1;
        if (n > 0) base = checked_mul(base, base);
    }
    return result;
}

// Exact halving; the caller is responsible for parity.
inline std::int64_t exact_half(std::int64_t a) {
    if (a % 2 != 0) throw InternalError("exact_half on odd value " + std::to_string(a));
    return a / 2;
}

}  // namespace curveclass
