#include "phi3/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace phi3 {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool value_is_squarefree(u128 v) {
  auto f = factorize(v);
  for (auto& [p, e] : f.factors)
    if (e >= 2) return false;
  return true;
}

struct SievePrime {
  u32 p;
  u32 nroots;
  u64 r[2];
};

// Primes p <= bound with lambda(p) > 0 (p = 3 or p = 1 (mod 3)) and their roots.
std::vector<SievePrime> sieve_primes_with_roots(u64 bound) {
  std::vector<SievePrime> out;
  if (bound < 2) return out;
  PrimeTable pt = sieve_primes(bound);
  for (u32 p : pt.primes) {
    if (p != 3 && p % 3 != 1) continue;
    RootSet rs = roots_mod_prime(p);
    if (rs.roots.empty()) continue;
    SievePrime sp{p, (u32)rs.roots.size(), {rs.roots[0], 0}};
    if (rs.roots.size() > 1) sp.r[1] = rs.roots[1];
    out.push_back(sp);
  }
  return out;
}

template <typename V>
u64 count_segment(u64 lo, u64 hi, const std::vector<SievePrime>& ps) {
  const size_t len = (size_t)(hi - lo + 1);
  std::vector<V> res(len);
  std::vector<u8> bad(len, 0);
  for (size_t i = 0; i < len; ++i) {
    u64 n = lo + i;
    res[i] = (V)poly_value(n);
  }
  for (const auto& sp : ps) {
    const u64 p = sp.p;
    const u64 rem = lo % p;
    for (u32 j = 0; j < sp.nroots; ++j) {
      u64 first = lo + (sp.r[j] + p - rem) % p;
      for (u64 n = first; n <= hi; n += p) {
        V& v = res[n - lo];
        int c = 0;
        while (v % (V)p == 0) {
          v /= (V)p;
          ++c;
        }
        if (c >= 2) bad[n - lo] = 1;
      }
    }
  }
  u64 count = 0;
  for (size_t i = 0; i < len; ++i) {
    if (bad[i]) continue;
    V rv = res[i];
    if (rv > 1 && is_perfect_square((u128)rv)) continue;
    ++count;
  }
  return count;
}

// Sum of mu(d) over squarefree d | s with d > z, where qs are the distinct
// primes of s. At most 5 primes fit below sqrt(X^2+X+1) for X <= 10^6.
i64 tail_mu_sum(const std::vector<u64>& qs, u64 z) {
  i64 total = 0;
  const size_t k = qs.size();
  for (u32 mask = 1; mask < (1u << k); ++mask) {
    u128 prod = 1;
    int bits = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        prod *= qs[i];
        ++bits;
      }
    if (prod > z) total += (bits & 1) ? -1 : 1;
  }
  return total;
}

}  // namespace

CensusReport gamma_oracle(u64 X, double budget_seconds) {
  if (X == 0) throw std::domain_error("gamma_oracle: X must be positive");
  auto t0 = clock_type::now();
  u64 g = 0;
  for (u64 n = 1; n <= X; ++n) {
    if (budget_seconds > 0 && (n & 4095) == 0 && seconds_since(t0) > budget_seconds)
      throw budget_error("gamma_oracle: time budget exceeded");
    if (value_is_squarefree(poly_value(n))) ++g;
  }
  return {X, g, CensusMethod::oracle, {}, {}, {}, seconds_since(t0)};
}

CensusReport gamma_sieve(u64 X, unsigned threads) {
  if (X == 0) throw std::domain_error("gamma_sieve: X must be positive");
  auto t0 = clock_type::now();
  const u64 cube_bound = icbrt(poly_value(X));
  const auto ps = sieve_primes_with_roots(cube_bound);

  const u64 seg = 1ull << 20;
  const u64 nseg = (X + seg - 1) / seg;
  std::vector<u64> counts(nseg, 0);
  std::atomic<u64> next{0};
  const bool narrow = X <= 0xFFFFFFFEull;  // v(n) < 2^64
  auto worker = [&] {
    for (;;) {
      u64 s = next.fetch_add(1);
      if (s >= nseg) break;
      u64 lo = 1 + s * seg;
      u64 hi = std::min(X, lo + seg - 1);
      counts[s] = narrow ? count_segment<u64>(lo, hi, ps) : count_segment<u128>(lo, hi, ps);
    }
  };
  unsigned nt = std::max(1u, threads);
  if (nt == 1 || nseg == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<u64>(nt, nseg); ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  u64 g = std::accumulate(counts.begin(), counts.end(), (u64)0);
  return {X, g, CensusMethod::sieve, {}, {}, {}, seconds_since(t0)};
}

u64 count_multiples(u64 X, u64 d) { return count_multiples(X, d, factorize(d)); }

u64 count_multiples(u64 X, u64 d, const Factorization& fd) {
  if (d == 0) throw std::domain_error("count_multiples: d must be positive");
  if (d > 3037000499ull) throw std::domain_error("count_multiples: d^2 exceeds 2^63");
  if (fd.value != d) throw std::domain_error("count_multiples: factorization mismatch");
  Factorization fd2;
  fd2.value = (u128)d * d;
  for (auto& [p, e] : fd.factors) fd2.factors.push_back({p, 2 * e});
  const u64 q = (u64)fd2.value;
  RootSet rs = roots_mod(q, fd2);
  i128 total = 0;
  for (u64 n0 : rs.roots)
    total += floor_div128((i128)X - (i128)n0, (i128)q) - floor_div128(-(i128)n0, (i128)q);
  return (u64)total;
}

CensusReport gamma_decomposed(u64 X, u64 z) {
  if (X == 0) throw std::domain_error("gamma_decomposed: X must be positive");
  if (X > 1000000) throw std::domain_error("gamma_decomposed: direct tail evaluation capped at X = 10^6");
  const u64 zmax = isqrt(poly_value(X));
  if (z < 1 || z > zmax) throw std::domain_error("gamma_decomposed: z out of range");
  auto t0 = clock_type::now();

  // head: d <= z; only squarefree d whose primes are all 1 (mod 3) contribute
  i64 g1 = 0;
  auto spf = spf_upto((u32)z);
  for (u64 d = 1; d <= z; ++d) {
    Factorization fd;
    fd.value = d;
    u32 rest = (u32)d;
    bool ok = true;
    int parity = 0;
    while (rest > 1) {
      u32 p = spf[rest];
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e > 1 || p % 3 != 1) {
        ok = false;
        break;
      }
      fd.factors.push_back({p, 1});
      ++parity;
    }
    if (!ok) continue;
    i64 mu = (parity & 1) ? -1 : 1;
    g1 += mu * (i64)count_multiples(X, d, fd);
  }

  // tail: d > z picked up from the square part of each value
  i64 g2 = 0;
  for (u64 n = 1; n <= X; ++n) {
    auto f = factorize(poly_value(n));
    std::vector<u64> squared;
    for (auto& [p, e] : f.factors)
      if (e >= 2) squared.push_back((u64)p);
    if (squared.empty()) continue;
    g2 += tail_mu_sum(squared, z);
  }

  CensusReport rep;
  rep.X = X;
  rep.gamma = (u64)(g1 + g2);
  rep.method = CensusMethod::decomposed;
  rep.z = z;
  rep.gamma1 = g1;
  rep.gamma2 = g2;
  rep.elapsed = seconds_since(t0);
  return rep;
}

std::optional<u64> smallest_nonsquarefree(u64 limit) {
  if (limit == 0) throw std::domain_error("smallest_nonsquarefree: limit must be positive");
  for (u64 n = 1; n <= limit; ++n)
    if (!value_is_squarefree(poly_value(n))) return n;
  return std::nullopt;
}

}  // namespace phi3
