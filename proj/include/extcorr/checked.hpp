#pragma once

// Overflow-checked 64-bit integer helpers. All slope comparisons go through
// these so a too-large input is rejected instead of silently wrapping.

#include <cstdint>

#include "extcorr/error.hpp"

namespace extcorr {

using Int = std::int64_t;

namespace checked {

[[noreturn]] void overflow(const char* op);

inline Int add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) overflow("add");
  return out;
}

inline Int sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) overflow("sub");
  return out;
}

inline Int mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) overflow("mul");
  return out;
}

inline Int neg(Int a) { return sub(0, a); }

/// Floor division, b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Nonnegative remainder, b > 0.
inline Int mod_floor(Int a, Int b) {
  Int m = a % b;
  return m < 0 ? m + b : m;
}

inline Int gcd(Int a, Int b) {
  // |INT64_MIN| is not representable.
  if (a == INT64_MIN || b == INT64_MIN) overflow("gcd");
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct BezoutResult {
  Int gcd;
  Int x;
  Int y;
};

/// Solves a*x + b*y = gcd(a, b) for a, b >= 0.
BezoutResult extended_euclid(Int a, Int b);

}  // namespace checked
}  // namespace extcorr
