#pragma once

#include <map>
#include <vector>

#include "phi3/congruence.hpp"

namespace phi3 {

// Primitive solution of x^2+xy+y^2 = n with x >= 1, y != 0, gcd(x, y) = 1.
struct Representation {
  u64 x = 1;
  i64 y = 1;
  u64 n = 3;
};

// All representations of n, ordered by (x, y) ascending. For each x up to
// sqrt(4n/3) the quadratic y^2 + xy + (x^2 - n) = 0 is solved over Z.
std::vector<Representation> enumerate_representations(u64 n);

// The residue z in [1, n] with z*y = x (mod n); it satisfies z^2+z+1 = 0 (mod n).
u64 forward_map(const Representation& rep);

// Inverse construction: from a root z of z^2+z+1 = 0 (mod n) build a
// representation via the continued-fraction convergent a/q of z/n with the
// largest denominator q <= sqrt(n), then r = z*q - a*n. The pair (r, q)
// (sign-normalized so x > 0) satisfies r^2+rq+q^2 = n; the alternative value
// 2n would force n even and cannot occur. Requires 3 does not divide n, n >= 7.
Representation section(u64 z, u64 n);

// Fiber sizes of forward_map over RootSet(n); the total equals the number of
// representations. Requires 3 does not divide n, n >= 7.
std::map<u64, u64> fiber_statistics(u64 n);

}  // namespace phi3
