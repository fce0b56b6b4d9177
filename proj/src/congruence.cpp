#include "phi3/congruence.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace phi3 {

namespace {

// y with y^2 = a (mod p), p odd prime, a a quadratic residue.
// Exhaustive search below 10^4, Tonelli-Shanks above.
u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p < 10000) {
    for (u64 y = 1; y < p; ++y)
      if (mulmod64(y, y, p) == a) return y;
    throw std::domain_error("sqrt_mod: not a quadratic residue");
  }
  if (powmod64(a, (p - 1) / 2, p) != 1) throw std::domain_error("sqrt_mod: not a quadratic residue");
  if (p % 4 == 3) return powmod64(a, (p + 1) / 4, p);
  // Tonelli-Shanks, deterministic non-residue search
  u64 s = p - 1;
  u64 e = 0;
  while (!(s & 1)) {
    s >>= 1;
    ++e;
  }
  u64 z = 2;
  while (powmod64(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 M = e;
  u64 c = powmod64(z, s, p);
  u64 t = powmod64(a, s, p);
  u64 R = powmod64(a, (s + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod64(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < M; ++j) b = mulmod64(b, b, p);
    M = i;
    c = mulmod64(b, b, p);
    t = mulmod64(t, c, p);
    R = mulmod64(R, b, p);
  }
  return R;
}

u64 checked_pow(u64 p, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= p;
    if (r > ~(u64)0) throw std::domain_error("prime power exceeds 2^64");
  }
  return (u64)r;
}

std::mutex g_cache_mutex;
std::unordered_map<u64, RootSet> g_root_cache;
constexpr size_t kRootCacheCapacity = 1 << 18;

}  // namespace

RootSet roots_mod_prime(u64 p) {
  if (!is_prime(p)) throw std::domain_error("roots_mod_prime: p must be prime");
  RootSet rs{p, {}};
  if (p == 3) {
    rs.roots = {1};
    return rs;
  }
  if (p % 3 != 1) return rs;  // covers p = 2 and p = 2 (mod 3)
  u64 y = sqrt_mod(p - 3, p);
  u64 inv2 = (p + 1) / 2;
  u64 z1 = mulmod64((y + p - 1) % p, inv2, p);
  u64 z2 = p - 1 - z1;
  rs.roots = {std::min(z1, z2), std::max(z1, z2)};
  return rs;
}

u64 hensel_lift(u64 root, u64 p, unsigned k) {
  if (k == 0) throw std::domain_error("hensel_lift: k must be >= 1");
  if (p == 3) throw std::domain_error("hensel_lift: z^2+z+1 = 0 (mod 9) has no solution");
  if (!is_prime(p)) throw std::domain_error("hensel_lift: p must be prime");
  u64 pk = checked_pow(p, k);
  u64 pk1 = checked_pow(p, k + 1);
  (void)pk1;
  if (root < 1 || root > pk) throw std::domain_error("hensel_lift: root out of range");
  u128 val = (u128)root * root + root + 1;
  if (val % pk != 0) throw std::domain_error("hensel_lift: root does not satisfy the congruence");
  u64 fprime = (u64)(((u128)2 * root + 1) % p);
  if (fprime == 0) throw std::domain_error("hensel_lift: derivative not invertible");
  u64 w = (u64)((val / pk) % p);
  u64 t = mulmod64((p - w) % p, mod_inverse_u(fprime, p), p);
  return root + t * pk;
}

RootSet roots_mod(u64 m, const Factorization& f) {
  if (m == 0) throw std::domain_error("roots_mod: modulus must be positive");
  if (f.value != m) throw std::domain_error("roots_mod: factorization does not match modulus");
  RootSet rs{m, {}};
  if (m == 1) {
    rs.roots = {1};
    return rs;
  }
  struct Component {
    u64 mod;
    std::vector<u64> roots;
  };
  std::vector<Component> comps;
  for (auto& [pp, e] : f.factors) {
    u64 p = (u64)pp;
    if (p == 3) {
      if (e >= 2) return rs;  // no solution mod 9
      comps.push_back({3, {1}});
    } else if (p % 3 != 1) {
      return rs;
    } else {
      std::vector<u64> cur = roots_mod_prime(p).roots;
      for (int j = 1; j < e; ++j)
        for (auto& r : cur) r = hensel_lift(r, p, (unsigned)j);
      comps.push_back({checked_pow(p, (unsigned)e), cur});
    }
  }
  std::vector<u64> acc = {0};
  u64 M = 1;
  for (auto& c : comps) {
    std::vector<u64> next;
    next.reserve(acc.size() * c.roots.size());
    for (u64 r0 : acc)
      for (u64 r1 : c.roots) {
        std::pair<u64, u64> pr[2] = {{r0, M}, {r1 % c.mod, c.mod}};
        next.push_back(crt(pr).first);
      }
    M *= c.mod;
    acc = std::move(next);
  }
  for (auto& r : acc)
    if (r == 0) r = m;  // representative range is [1, m]
  std::sort(acc.begin(), acc.end());
  rs.roots = std::move(acc);
  return rs;
}

RootSet roots_mod(u64 m) {
  {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    auto it = g_root_cache.find(m);
    if (it != g_root_cache.end()) return it->second;
  }
  RootSet rs = roots_mod(m, factorize(m));
  {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    if (g_root_cache.size() >= kRootCacheCapacity) g_root_cache.clear();
    g_root_cache.emplace(m, rs);
  }
  return rs;
}

u64 lambda(u64 q) {
  if (q == 0) throw std::domain_error("lambda: q must be positive");
  return roots_mod(q).roots.size();
}

std::vector<u32> lambda_upto(u32 limit) {
  auto spf = spf_upto(limit);
  std::vector<u32> lam(limit + 1, 0);
  if (limit >= 1) lam[1] = 1;
  for (u32 n = 2; n <= limit; ++n) {
    u32 p = spf[n];
    u32 q = n;
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    u32 local = (p == 3) ? (e == 1 ? 1 : 0) : (p % 3 == 1 ? 2 : 0);
    lam[n] = lam[q] * local;
  }
  return lam;
}

u64 reflect_root(u64 n, u64 m) {
  if (m == 0 || n < 1 || n > m) throw std::domain_error("reflect_root: n not in [1, m]");
  if (((u128)n * n + n + 1) % m != 0) throw std::domain_error("reflect_root: n is not a root");
  i128 t = (i128)m - (i128)n - 1;
  u64 r = (u64)mod_floor128(t, (i128)m);
  return r == 0 ? m : r;
}

void clear_root_cache() {
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  g_root_cache.clear();
}

}  // namespace phi3
