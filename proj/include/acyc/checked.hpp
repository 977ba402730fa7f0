#pragma once

#include <acyc/errors.hpp>

#include <cstdint>

namespace acyc::checked {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ResourceLimitError("64-bit counter overflow");
    }
    return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ResourceLimitError("64-bit counter overflow");
    }
    return r;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ResourceLimitError("64-bit integer overflow");
    }
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ResourceLimitError("64-bit integer overflow");
    }
    return r;
}

}  // namespace acyc::checked
