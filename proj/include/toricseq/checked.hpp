#pragma once

#include <cstdint>

#include "toricseq/error.hpp"

// Checked 64-bit integer arithmetic. Every coefficient in the library goes
// through these; overflow is a logic error and is reported as such.
namespace toricseq {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

// a + b * c
inline Int fma(Int a, Int b, Int c) { return add(a, mul(b, c)); }

}  // namespace checked
}  // namespace toricseq
