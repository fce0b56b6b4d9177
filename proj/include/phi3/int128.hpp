#pragma once

#include <cstdint>
#include <string>

namespace phi3 {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 v);
std::string to_string(i128 v);

// floor(sqrt(n)); exact for all n < 2^127
u64 isqrt(u128 n);
// floor(cbrt(n)); exact
u64 icbrt(u128 n);
// floor(n^(1/k)); exact, k >= 1
u64 iroot(u128 n, unsigned k);
bool is_perfect_square(u128 n, u64* root = nullptr);

constexpr u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// floor division, b > 0
constexpr i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}
constexpr i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}
// a mod b in [0, b), b > 0
constexpr i128 mod_floor128(i128 a, i128 b) { return a - floor_div128(a, b) * b; }

u64 mulmod64(u64 a, u64 b, u64 m);
u64 powmod64(u64 a, u64 e, u64 m);
// works for any m < 2^127; fast path when m fits in 64 bits
u128 mulmod128(u128 a, u128 b, u128 m);
u128 powmod128(u128 a, u128 e, u128 m);

}  // namespace phi3
