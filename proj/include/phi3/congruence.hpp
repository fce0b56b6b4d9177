#pragma once

#include <vector>

#include "phi3/numtheory.hpp"

namespace phi3 {

// Incongruent solutions of z^2+z+1 = 0 (mod modulus), representatives in [1, modulus].
struct RootSet {
  u64 modulus = 1;
  std::vector<u64> roots;  // ascending, distinct
};

// Roots modulo a prime: {1} for p = 3, two roots for p = 1 (mod 3) found by
// solving (2z+1)^2 = -3 (mod p), empty for p = 2 (mod 3).
RootSet roots_mod_prime(u64 p);

// Lift a root of z^2+z+1 = 0 from modulus p^k to p^{k+1}. Unique since
// p does not divide 2*root+1 for p != 3; throws for p = 3 (no solution mod 9).
u64 hensel_lift(u64 root, u64 p, unsigned k);

// All roots modulo m, composed by CRT from prime-power root sets.
RootSet roots_mod(u64 m, const Factorization& f);
// Convenience overload: factorizes m internally and memoizes the result.
RootSet roots_mod(u64 m);

// lambda(q) = #roots mod q. Multiplicative; lambda(1) = 1, lambda(9) = 0.
u64 lambda(u64 q);

// lambda(q) for all q in [0, limit] via the multiplicative prime-power rule
// (lambda(0) := 0). Used for bulk scans; independent checks go through roots_mod.
std::vector<u32> lambda_upto(u32 limit);

// The companion root m-n-1 (mod m), also a solution; involution on RootSet(m).
u64 reflect_root(u64 n, u64 m);

void clear_root_cache();

}  // namespace phi3
