#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace ferrers {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// 128-bit unsigned integers back every checked product in the library
// (diagram reconstruction, binomials, reported chain values).
using u128 = unsigned __int128;

inline constexpr u128 u128_max = ~u128{0};

// Checked arithmetic; returns false when the exact result does not fit.
inline bool checked_add(u128 a, u128 b, u128& out) {
  return !__builtin_add_overflow(a, b, &out);
}

inline bool checked_mul(u128 a, u128 b, u128& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

// floor(log2(m)); requires m >= 1.
inline u64 floor_log2(u64 m) {
  return static_cast<u64>(std::bit_width(m)) - 1;
}

// Exact integer square root.
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

std::string to_string(u128 v);

}  // namespace ferrers
