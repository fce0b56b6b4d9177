#include "phi3/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace phi3 {

PrimeTable sieve_primes(u64 limit) {
  if (limit < 2) throw std::domain_error("sieve_primes: limit must be >= 2");
  if (limit > 0xFFFFFFFFull) throw std::domain_error("sieve_primes: limit above 2^32 unsupported");
  std::vector<u8> composite(limit + 1, 0);
  PrimeTable table;
  table.limit = limit;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    table.primes.push_back((u32)i);
    if (i * i <= limit)
      for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return table;
}

std::vector<u32> spf_upto(u32 limit) {
  std::vector<u32> spf(limit + 1, 0);
  std::vector<u32> primes;
  for (u32 i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(i);
    }
    for (u32 p : primes) {
      if (p > spf[i] || (u64)p * i > limit) break;
      spf[p * i] = p;
    }
  }
  return spf;
}

std::vector<signed char> mobius_upto(u32 limit) {
  auto spf = spf_upto(limit);
  std::vector<signed char> mu(limit + 1, 0);
  if (limit >= 1) mu[1] = 1;
  for (u32 n = 2; n <= limit; ++n) {
    u32 p = spf[n], m = n / p;
    mu[n] = (m % p == 0) ? 0 : -mu[m];
  }
  return mu;
}

namespace {

const std::vector<u32>& strip_primes() {
  static const std::vector<u32> primes = sieve_primes(1024).primes;
  return primes;
}

bool miller_rabin(u128 n, u64 a) {
  if (a % n == 0) return true;
  u128 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  u128 x = powmod128(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod128(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle variant of Pollard rho; input odd composite with no factor <= 1024.
// Deterministic: x0 = 2, polynomial offset c = 1, 2, 3, ...
template <typename T>
T rho_brent(T n) {
  auto mul = [&](T a, T b) {
    if constexpr (sizeof(T) == 8)
      return mulmod64(a, b, n);
    else
      return (T)mulmod128(a, b, n);
  };
  auto gcdn = [&](T a) { return (T)gcd128((u128)a, (u128)n); };
  for (T c = 1;; ++c) {
    T x = 2, y = 2, d = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 batch = 128;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mul(y, y) + c) % n;
      for (u64 k = 0; k < r && d == 1; k += batch) {
        ys = y;
        u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = (mul(y, y) + c) % n;
          q = mul(q, x > y ? x - y : y - x);
        }
        d = gcdn(q);
      }
      r <<= 1;
    }
    if (d == n) {
      do {
        ys = (mul(ys, ys) + c) % n;
        d = gcdn(x > ys ? x - ys : ys - x);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(u128 m, std::map<u128, int>& acc) {
  if (m == 1) return;
  if (is_prime(m)) {
    acc[m] += 1;
    return;
  }
  u128 d = (m <= ~(u64)0) ? (u128)rho_brent<u64>((u64)m) : rho_brent<u128>(m);
  factor_rec(d, acc);
  factor_rec(m / d, acc);
}

}  // namespace

bool is_prime(u128 n) {
  if (n < 2) return false;
  for (u32 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  if (n <= ~(u64)0) {
    // deterministic for n < 2^64
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
      if (!miller_rabin(n, a)) return false;
    return true;
  }
  // deterministic below 3.3*10^24; extra bases beyond
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71})
    if (!miller_rabin(n, a)) return false;
  return true;
}

Factorization factorize(u128 n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  if (n > (u128)1 << 96) throw std::domain_error("factorize: n exceeds 2^96");
  Factorization f;
  f.value = n;
  if (n == 1) return f;
  u128 m = n;
  bool small_cofactor = false;
  for (u32 p : strip_primes()) {
    if ((u128)p * p > m) {
      small_cofactor = true;
      break;
    }
    if (m % p == 0) {
      int e = 0;
      do {
        m /= p;
        ++e;
      } while (m % p == 0);
      f.factors.push_back({p, e});
    }
  }
  if (m > 1) {
    if (small_cofactor || m < (u128)1025 * 1025) {
      f.factors.push_back({m, 1});
    } else {
      std::map<u128, int> rest;
      factor_rec(m, rest);
      for (auto& [p, e] : rest) f.factors.push_back({p, e});
    }
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

int mobius(const Factorization& f) {
  for (auto& [p, e] : f.factors)
    if (e >= 2) return 0;
  return (f.factors.size() & 1) ? -1 : 1;
}

u64 tau(const Factorization& f) {
  u64 t = 1;
  for (auto& [p, e] : f.factors) t *= (u64)(e + 1);
  return t;
}

u64 largest_square_divisor(const Factorization& f) {
  u128 d = 1;
  for (auto& [p, e] : f.factors)
    for (int i = 0; i < e / 2; ++i) d *= p;
  return (u64)d;
}

u64 mod_inverse(i64 a, u64 m) {
  if (m == 0 || m >= (u64)1 << 63) throw std::domain_error("mod_inverse: modulus out of range");
  i64 mm = (i64)m;
  i64 r = a % mm;
  if (r < 0) r += mm;
  return mod_inverse_u((u64)r, m);
}

u64 mod_inverse_u(u64 a, u64 m) {
  if (m == 0) throw std::domain_error("mod_inverse: zero modulus");
  if (m == 1) return 0;
  i128 t = 0, nt = 1;
  i128 r = (i128)m, nr = (i128)(a % m);
  while (nr != 0) {
    i128 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  if (t < 0) t += (i128)m;
  return (u64)t;
}

std::pair<u64, u64> crt(std::span<const std::pair<u64, u64>> congruences) {
  u128 x = 0, M = 1;
  for (auto& [r, m] : congruences) {
    if (m == 0) throw std::domain_error("crt: zero modulus");
    if (gcd128(M, m) != 1) throw std::domain_error("crt: moduli not pairwise coprime");
    if (M > (u128)(~(u64)0) / m) throw std::domain_error("crt: modulus product exceeds 2^64");
    u64 Mm = (u64)(M % m);
    u64 xm = (u64)(x % m);
    u64 diff = (r % m + m - xm) % m;
    u64 t = mulmod64(diff, mod_inverse_u(Mm, m), m);
    x += M * t;
    M *= m;
  }
  return {(u64)x, (u64)M};
}

}  // namespace phi3
