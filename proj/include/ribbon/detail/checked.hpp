#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ribbon::detail {

// Machine-integer arithmetic that fails hard instead of wrapping.

[[noreturn]] inline void overflow(const char* op)
{
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
}

inline std::int64_t neg(std::int64_t a)
{
    return sub(0, a);
}

inline std::int64_t pow(std::int64_t base, unsigned exp)
{
    std::int64_t r = 1;
    while (exp-- > 0) r = mul(r, base);
    return r;
}

inline std::int64_t abs(std::int64_t a)
{
    return a < 0 ? neg(a) : a;
}

}  // namespace ribbon::detail
