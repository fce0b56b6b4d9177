#include "phi3/forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace phi3 {

namespace {

bool valid_representation(const Representation& rep) {
  if (rep.x < 1 || rep.y == 0) return false;
  i128 x = (i128)rep.x, y = (i128)rep.y;
  if (x * x + x * y + y * y != (i128)rep.n) return false;
  return std::gcd((i64)rep.x, rep.y < 0 ? -rep.y : rep.y) == 1;
}

}  // namespace

std::vector<Representation> enumerate_representations(u64 n) {
  if (n == 0) throw std::domain_error("enumerate_representations: n must be positive");
  std::vector<Representation> out;
  for (u64 x = 1; 3 * (u128)x * x <= 4 * (u128)n; ++x) {
    u128 disc = 4 * (u128)n - 3 * (u128)x * x;
    u64 t;
    if (!is_perfect_square(disc, &t)) continue;
    if (((t ^ x) & 1) != 0) continue;  // t and x share parity whenever t^2 = 4n-3x^2
    i64 ys[2] = {((i64)t - (i64)x) / 2, (-(i64)t - (i64)x) / 2};
    int count = (t == 0) ? 1 : 2;
    for (int i = 0; i < count; ++i) {
      i64 y = ys[i];
      if (y == 0) continue;
      if (std::gcd((i64)x, y < 0 ? -y : y) != 1) continue;
      out.push_back({x, y, n});
    }
  }
  std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return out;
}

u64 forward_map(const Representation& rep) {
  if (!valid_representation(rep)) throw std::domain_error("forward_map: invalid representation");
  const u64 n = rep.n;
  if (n == 1) return 1;
  u64 ym = (u64)mod_floor128((i128)rep.y, (i128)n);
  u64 z = mulmod64(rep.x % n, mod_inverse_u(ym, n), n);
  if (z == 0) z = n;
  return z;
}

Representation section(u64 z, u64 n) {
  if (n < 7 || n % 3 == 0) throw std::domain_error("section: requires n >= 7 with 3 not dividing n");
  if (z < 1 || z >= n || ((u128)z * z + z + 1) % n != 0)
    throw std::domain_error("section: z is not a root of z^2+z+1 mod n");

  // convergents of z/n; keep the last one with q^2 <= n
  u64 a_best = 0, q_best = 1;
  u64 h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  u64 u = z, v = n;
  while (v != 0) {
    u64 a = u / v;
    u64 r = u % v;
    u = v;
    v = r;
    u64 h = a * h1 + h2;
    u64 k = a * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    if ((u128)k * k <= n) {
      a_best = h;
      q_best = k;
    } else {
      break;
    }
  }

  i128 r = (i128)z * q_best - (i128)a_best * n;
  i128 q = (i128)q_best;
  i128 val = r * r + r * q + q * q;
  if (val == (i128)n) {
    if (r > 0) return {(u64)r, (i64)q_best, n};
    return {(u64)(-r), -(i64)q_best, n};
  }
  // val = 2n would force r, q and hence n even, contradicting n | z^2+z+1 odd
  throw std::logic_error("section: Dirichlet construction failed");
}

std::map<u64, u64> fiber_statistics(u64 n) {
  if (n < 7 || n % 3 == 0) throw std::domain_error("fiber_statistics: requires n >= 7 with 3 not dividing n");
  RootSet rs = roots_mod(n);
  std::map<u64, u64> fibers;
  for (u64 r : rs.roots) fibers[r] = 0;
  for (const auto& rep : enumerate_representations(n)) {
    u64 z = forward_map(rep);
    auto it = fibers.find(z);
    if (it == fibers.end()) throw std::logic_error("fiber_statistics: image is not a root");
    ++it->second;
  }
  return fibers;
}

}  // namespace phi3
