#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace solgrowth {

// Thrown when a 64-bit computation would wrap.  All group/polynomial
// arithmetic in this library goes through these helpers; silent overflow
// is never acceptable in an exactness-critical pipeline.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a construction exceeds an explicit resource budget
// (state counts, element counts).  Carries a human-readable message;
// callers that need machine-readable output wrap it themselves.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

}  // namespace solgrowth
