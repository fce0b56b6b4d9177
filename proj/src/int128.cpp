#include "phi3/int128.hpp"

#include <algorithm>
#include <cmath>

namespace phi3 {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s += char('0' + (int)(v % 10));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string((u128)(-v));
  return to_string((u128)v);
}

u64 isqrt(u128 n) {
  if (n == 0) return 0;
  u128 r = (u128)sqrtl((long double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return (u64)r;
}

u64 icbrt(u128 n) {
  if (n == 0) return 0;
  u128 r = (u128)cbrtl((long double)n);
  while (r > 0 && r * r * r > n) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return (u64)r;
}

namespace {
// r^k, saturating at 2^127 so comparisons against n stay valid
u128 pow_sat(u128 r, unsigned k) {
  const u128 cap = ~(u128)0 >> 1;
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r != 0 && acc > cap / r) return cap;
    acc *= r;
  }
  return acc;
}
}  // namespace

u64 iroot(u128 n, unsigned k) {
  if (k == 0 || n == 0) return 0;
  if (k == 1) return (u64)std::min<u128>(n, ~(u64)0);
  if (k == 2) return isqrt(n);
  if (k == 3) return icbrt(n);
  u128 r = (u128)powl((long double)n, 1.0L / k);
  while (r > 0 && pow_sat(r, k) > n) --r;
  while (pow_sat(r + 1, k) <= n) ++r;
  return (u64)r;
}

bool is_perfect_square(u128 n, u64* root) {
  // quadratic residues mod 64 prune ~82% of non-squares before the isqrt
  static constexpr u64 kSquareMask = [] {
    u64 m = 0;
    for (u64 i = 0; i < 64; ++i) m |= (u64)1 << ((i * i) & 63);
    return m;
  }();
  if (!((kSquareMask >> ((u64)n & 63)) & 1)) return false;
  u64 r = isqrt(n);
  if ((u128)r * r != n) return false;
  if (root) *root = r;
  return true;
}

u64 mulmod64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

u128 mulmod128(u128 a, u128 b, u128 m) {
  if (m <= ~(u64)0) return mulmod64((u64)(a % m), (u64)(b % m), (u64)m);
  a %= m;
  b %= m;
  u128 r = 0;
  while (b) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    b >>= 1;
    a <<= 1;
    if (a >= m) a -= m;
  }
  return r;
}

u128 powmod128(u128 a, u128 e, u128 m) {
  u128 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, a, m);
    a = mulmod128(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace phi3
