#pragma once

#include <optional>
#include <stdexcept>

#include "phi3/congruence.hpp"

namespace phi3 {

enum class CensusMethod { oracle, sieve, decomposed };

struct CensusReport {
  u64 X = 0;
  u64 gamma = 0;  // #{n <= X : n^2+n+1 squarefree}
  CensusMethod method = CensusMethod::oracle;
  std::optional<u64> z;       // decomposition cut
  std::optional<i64> gamma1;  // sum over d <= z of mu(d) * Sigma(X, d^2)
  std::optional<i64> gamma2;  // tail d > z
  double elapsed = 0.0;       // seconds
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr u128 poly_value(u64 n) { return (u128)n * n + n + 1; }

// Exact census by full factorization of every value. budget_seconds <= 0 means
// unlimited; otherwise throws budget_error once exceeded.
CensusReport gamma_oracle(u64 X, double budget_seconds = 0.0);

// Exact census by segmented sieving. For each prime p <= (X^2+X+1)^{1/3} with
// lambda(p) > 0, p-powers are divided out of v(n) at n = root (mod p) and
// positions with p^2 | v(n) are flagged. A residual cofactor > 1 has at most
// two prime factors, all above the cube root, so it is squarefree unless it
// is a perfect square.
CensusReport gamma_sieve(u64 X, unsigned threads = 1);

// Sigma(X, d^2) = #{n <= X : d^2 | n^2+n+1}, evaluated by partitioning into
// residue classes: sum over roots n0 mod d^2 of floor((X-n0)/d^2) - floor(-n0/d^2).
u64 count_multiples(u64 X, u64 d);
u64 count_multiples(u64 X, u64 d, const Factorization& fd);

// Gamma = Gamma1 + Gamma2 exactly: Gamma1 over d <= z via count_multiples,
// Gamma2 over d > z directly from the square part of each factored value.
// The direct tail needs a full factorization per n, so X is capped at 10^6.
CensusReport gamma_decomposed(u64 X, u64 z);

// least n <= limit with n^2+n+1 not squarefree, if any
std::optional<u64> smallest_nonsquarefree(u64 limit);

}  // namespace phi3
