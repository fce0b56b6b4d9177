#pragma once

#include <span>
#include <vector>

#include "phi3/census.hpp"

namespace phi3 {

// Rigorous enclosure of sigma = prod_p (1 - lambda(p^2)/p^2).
struct SigmaInterval {
  double lower = 0.0;
  double upper = 1.0;
  u64 prime_bound = 0;
};

// Partial Euler product over p <= prime_bound (only p = 1 (mod 3) contribute a
// non-unit factor 1 - 2/p^2), with outward-directed rounding and the tail
// factor bounded below by 1 - sum_{n > P} 2/n^2 > 1 - 2/P.
SigmaInterval sigma_euler(u64 prime_bound);

// sum_{d <= cutoff} mu(d) lambda(d^2) / d^2
double sigma_series(u64 cutoff);

// Provable bound on |sum_{d > cutoff} mu(d) lambda(d^2)/d^2|: the nonzero terms
// have squarefree d, where lambda(d^2) <= tau(d), and
// sum_{d > c} tau(d)/d^2 < (2 ln c + 4)/c.
double sigma_series_tail_bound(u64 cutoff);

struct ErrorRow {
  u64 X = 0;
  i64 gamma = 0;
  double sigma_X = 0.0;    // sigma midpoint * X
  double E = 0.0;          // gamma - sigma_X
  double normalized = 0.0; // |E| / X^{4/5}
};

// One row per grid point, census by gamma_sieve. Grid must be ascending and
// the sigma enclosure width at most 1e-6.
std::vector<ErrorRow> error_scan(std::span<const u64> grid, const SigmaInterval& sigma,
                                 unsigned threads = 1);

// Least-squares slope of log|E| against log X over rows with E != 0 (>= 3 required).
double exponent_fit(std::span<const ErrorRow> rows);

}  // namespace phi3
