#include "phi3/asymptotic.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace phi3 {

namespace {

double down(double x) { return std::nextafter(x, 0.0); }
double up(double x) { return std::nextafter(x, 2.0); }

}  // namespace

SigmaInterval sigma_euler(u64 prime_bound) {
  if (prime_bound < 7) throw std::domain_error("sigma_euler: prime_bound must be >= 7");
  PrimeTable pt = sieve_primes(prime_bound);
  double lo = 1.0, hi = 1.0;
  for (u32 p : pt.primes) {
    if (p % 3 != 1) continue;  // lambda(p^2) = 0 otherwise (p = 3 included: lambda(9) = 0)
    double f = 1.0 - 2.0 / ((double)p * (double)p);  // within 2 ulp of the exact factor
    lo = down(lo * down(down(f)));
    hi = up(hi * up(up(f)));
  }
  // tail factor in [1 - 2/P, 1]
  double tail_lo = down(down(1.0 - up(2.0 / (double)prime_bound)));
  lo = down(lo * tail_lo);
  return {lo, hi, prime_bound};
}

double sigma_series(u64 cutoff) {
  if (cutoff == 0) throw std::domain_error("sigma_series: cutoff must be positive");
  if (cutoff > 100000000ull) throw std::domain_error("sigma_series: cutoff above 10^8 unsupported");
  auto spf = spf_upto((u32)cutoff);
  long double total = 0.0L;
  for (u64 d = 1; d <= cutoff; ++d) {
    u32 rest = (u32)d;
    int omega = 0;
    bool ok = true;
    while (rest > 1) {
      u32 p = spf[rest];
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e > 1 || p % 3 != 1) {  // mu(d) = 0 or lambda(d^2) = 0
        ok = false;
        break;
      }
      ++omega;
    }
    if (!ok) continue;
    long double term = (long double)(1u << omega) / ((long double)d * (long double)d);
    total += (omega & 1) ? -term : term;
  }
  return (double)total;
}

double sigma_series_tail_bound(u64 cutoff) {
  if (cutoff == 0) throw std::domain_error("sigma_series_tail_bound: cutoff must be positive");
  return (2.0 * std::log((double)cutoff) + 4.0) / (double)cutoff;
}

std::vector<ErrorRow> error_scan(std::span<const u64> grid, const SigmaInterval& sigma,
                                 unsigned threads) {
  for (size_t i = 0; i + 1 < grid.size(); ++i)
    if (grid[i] >= grid[i + 1]) throw std::domain_error("error_scan: grid must be strictly ascending");
  if (!(sigma.upper - sigma.lower <= 1e-6))
    throw std::domain_error("error_scan: sigma enclosure width must be <= 1e-6");
  const double mid = sigma.lower + (sigma.upper - sigma.lower) / 2;
  std::vector<ErrorRow> rows(grid.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= grid.size()) break;
      u64 X = grid[i];
      CensusReport rep = gamma_sieve(X);
      ErrorRow row;
      row.X = X;
      row.gamma = (i64)rep.gamma;
      row.sigma_X = mid * (double)X;
      row.E = (double)row.gamma - row.sigma_X;
      row.normalized = std::fabs(row.E) / std::pow((double)X, 0.8);
      rows[i] = row;
    }
  };
  unsigned nt = std::max(1u, threads);
  if (nt == 1 || grid.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<size_t>(nt, grid.size()); ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

double exponent_fit(std::span<const ErrorRow> rows) {
  double s1 = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (r.E == 0.0) continue;
    double x = std::log((double)r.X);
    double y = std::log(std::fabs(r.E));
    s1 += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 3) throw std::domain_error("exponent_fit: need at least 3 rows with E != 0");
  double denom = s1 * sxx - sx * sx;
  if (denom == 0.0) throw std::domain_error("exponent_fit: degenerate grid");
  return (s1 * sxy - sx * sy) / denom;
}

}  // namespace phi3
