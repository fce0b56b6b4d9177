#pragma once

#include <span>
#include <utility>
#include <vector>

#include "phi3/int128.hpp"

namespace phi3 {

struct PrimeTable {
  u64 limit = 0;
  std::vector<u32> primes;  // all primes <= limit, ascending
};

// Sieve of Eratosthenes; limit >= 2.
PrimeTable sieve_primes(u64 limit);

// Smallest-prime-factor table for [0, limit] (spf[0] = spf[1] = 0), linear sieve.
std::vector<u32> spf_upto(u32 limit);
// Mobius function on [0, limit], derived from the spf table.
std::vector<signed char> mobius_upto(u32 limit);

struct Factorization {
  u128 value = 1;
  std::vector<std::pair<u128, int>> factors;  // (prime, exponent), primes ascending
};

bool is_prime(u128 n);

// Complete factorization of n in [1, 2^96]. Trial division by primes up to 1024,
// then Miller-Rabin + Brent's rho on the cofactor. Fully deterministic.
Factorization factorize(u128 n);

// mu: 0 if any exponent >= 2, else (-1)^#factors. mu(1) = 1.
int mobius(const Factorization& f);
// number of positive divisors
u64 tau(const Factorization& f);
// largest d with d^2 | value, i.e. prod p^floor(e/2)
u64 largest_square_divisor(const Factorization& f);

// Inverse of a modulo m, in [0, m); requires gcd(a, m) = 1 and 1 <= m < 2^63.
u64 mod_inverse(i64 a, u64 m);
u64 mod_inverse_u(u64 a, u64 m);

// x = r_i (mod m_i) for pairwise coprime moduli. Returns (x, prod m_i); the
// product must fit in u64.
std::pair<u64, u64> crt(std::span<const std::pair<u64, u64>> congruences);

}  // namespace phi3
