#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "phi3/asymptotic.hpp"

using namespace phi3;

TEST_CASE("sigma_euler single-factor window at P = 7") {
  auto s = sigma_euler(7);
  double partial = 47.0 / 49.0;
  CHECK(s.upper == doctest::Approx(partial).epsilon(1e-12));
  CHECK(s.lower == doctest::Approx(partial * (1.0 - 2.0 / 7.0)).epsilon(1e-12));
  CHECK(s.lower <= s.upper);
  CHECK_THROWS_AS(sigma_euler(6), std::domain_error);
}

TEST_CASE("sigma_euler intervals are nested and shrink") {
  SigmaInterval prev = sigma_euler(1000);
  for (u64 P : {10000ull, 100000ull, 1000000ull}) {
    SigmaInterval cur = sigma_euler(P);
    CHECK(cur.lower >= prev.lower);
    CHECK(cur.upper <= prev.upper);
    CHECK(cur.upper - cur.lower < prev.upper - prev.lower);
    prev = cur;
  }
  CHECK(prev.upper - prev.lower <= 2.0 * (2.0 / 1e6));
  // reference range for the density constant
  CHECK(prev.lower > 0.92);
  CHECK(prev.upper < 0.95);
}

TEST_CASE("sigma_series examples") {
  CHECK(sigma_series(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sigma_series(7) == doctest::Approx(1.0 - 2.0 / 49.0).epsilon(1e-14));
  CHECK_THROWS_AS(sigma_series(0), std::domain_error);
}

TEST_CASE("sigma_series agrees with sigma_euler within combined tails") {
  for (u64 c : {100ull, 1000ull, 10000ull}) {
    double s = sigma_series(c);
    SigmaInterval e = sigma_euler(c);
    double tail = sigma_series_tail_bound(c);
    CHECK(s >= e.lower - tail);
    CHECK(s <= e.upper + tail);
  }
}

TEST_CASE("error_scan rows and the X = 10 pinned case") {
  SigmaInterval s = sigma_euler(10000000);
  u64 grid[] = {10, 100};
  auto rows = error_scan(grid, s);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].gamma == 10);
  double mid = s.lower + (s.upper - s.lower) / 2;
  CHECK(rows[0].E == doctest::Approx(10.0 - mid * 10.0).epsilon(1e-12));
  CHECK(rows[1].gamma == 94);
  CHECK(rows[0].normalized == doctest::Approx(std::fabs(rows[0].E) / std::pow(10.0, 0.8)).epsilon(1e-12));

  auto empty = error_scan({}, s);
  CHECK(empty.empty());

  u64 badgrid[] = {100, 10};
  CHECK_THROWS_AS(error_scan(badgrid, s), std::domain_error);
  SigmaInterval wide = sigma_euler(100);
  u64 g2[] = {10};
  CHECK_THROWS_AS(error_scan(g2, wide), std::domain_error);
}

TEST_CASE("gamma/X stays near sigma for moderate X") {
  SigmaInterval s = sigma_euler(1000000);
  for (u64 X : {10000ull, 100000ull}) {
    double ratio = (double)gamma_sieve(X).gamma / (double)X;
    double slack = std::pow((double)X, -0.2);
    CHECK(ratio >= s.lower - slack);
    CHECK(ratio <= s.upper + slack);
  }
}

TEST_CASE("exponent_fit on synthetic rows") {
  std::vector<ErrorRow> rows;
  for (u64 X : {1000ull, 10000ull, 100000ull, 1000000ull}) {
    ErrorRow r;
    r.X = X;
    r.E = 3.25 * std::pow((double)X, 0.5);
    rows.push_back(r);
  }
  CHECK(exponent_fit(rows) == doctest::Approx(0.5).epsilon(1e-9));
  for (auto& r : rows) r.E = 42.0;
  CHECK(exponent_fit(rows) == doctest::Approx(0.0).epsilon(1e-9));
  rows.resize(2);
  CHECK_THROWS_AS(exponent_fit(rows), std::domain_error);
}
