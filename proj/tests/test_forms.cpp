#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "phi3/forms.hpp"

using namespace phi3;

namespace {

std::set<std::pair<u64, i64>> as_set(const std::vector<Representation>& reps) {
  std::set<std::pair<u64, i64>> s;
  for (auto& r : reps) s.insert({r.x, r.y});
  return s;
}

}  // namespace

TEST_CASE("enumerate_representations examples") {
  auto r7 = enumerate_representations(7);
  CHECK(r7.size() == 6);
  CHECK(as_set(r7) ==
        std::set<std::pair<u64, i64>>{{1, 2}, {1, -3}, {2, 1}, {2, -3}, {3, -1}, {3, -2}});
  // canonical order: (x, y) ascending
  CHECK(std::is_sorted(r7.begin(), r7.end(), [](auto& a, auto& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }));

  CHECK(enumerate_representations(5).empty());
  CHECK(as_set(enumerate_representations(3)) ==
        std::set<std::pair<u64, i64>>{{1, 1}, {1, -2}, {2, -1}});
}

TEST_CASE("representations satisfy the form identity and bounds") {
  for (u64 n = 1; n <= 3000; ++n)
    for (const auto& rep : enumerate_representations(n)) {
      i128 v = (i128)rep.x * rep.x + (i128)rep.x * rep.y + (i128)rep.y * rep.y;
      CHECK(v == (i128)n);
      CHECK(std::gcd((i64)rep.x, rep.y < 0 ? -rep.y : rep.y) == 1);
      CHECK(rep.x >= 1);
      CHECK(rep.y != 0);
      CHECK(3 * (u128)rep.x * rep.x <= 4 * (u128)n);
      u128 y2 = (u128)(rep.y < 0 ? -rep.y : rep.y);
      CHECK(3 * y2 * y2 <= 4 * (u128)n);
    }
}

TEST_CASE("forward_map examples for n = 7") {
  CHECK(forward_map({1, 2, 7}) == 4);
  CHECK(forward_map({2, 1, 7}) == 2);
  CHECK(forward_map({3, -1, 7}) == 4);
  CHECK_THROWS_AS(forward_map({1, 1, 7}), std::domain_error);  // not a representation
}

TEST_CASE("forward_map lands in RootSet(n) for all valid n <= 2000") {
  for (u64 n = 7; n <= 2000; ++n) {
    if (n % 3 == 0) continue;
    auto roots = roots_mod(n).roots;
    for (const auto& rep : enumerate_representations(n)) {
      u64 z = forward_map(rep);
      CHECK(((u128)z * z + z + 1) % n == 0);
      CHECK(std::find(roots.begin(), roots.end(), z) != roots.end());
    }
  }
}

TEST_CASE("section examples") {
  auto s = section(2, 7);
  CHECK(s.x == 2);
  CHECK(s.y == 1);
  s = section(4, 7);
  CHECK(s.x == 1);
  CHECK(s.y == 2);
  s = section(3, 13);
  CHECK((i128)s.x * s.x + (i128)s.x * s.y + (i128)s.y * s.y == 13);
  CHECK_THROWS_AS(section(1, 3), std::domain_error);    // n < 7
  CHECK_THROWS_AS(section(4, 21), std::domain_error);   // 3 | n
  CHECK_THROWS_AS(section(3, 7), std::domain_error);    // not a root
}

TEST_CASE("section then forward_map is the identity on roots (n <= 2000)") {
  for (u64 n = 7; n <= 2000; ++n) {
    if (n % 3 == 0) continue;
    for (u64 z : roots_mod(n).roots) {
      Representation rep = section(z, n);
      CHECK((i128)rep.x * rep.x + (i128)rep.x * rep.y + (i128)rep.y * rep.y == (i128)n);
      CHECK(std::gcd((i64)rep.x, rep.y < 0 ? -rep.y : rep.y) == 1);
      CHECK(forward_map(rep) == z);
    }
  }
}

TEST_CASE("fiber_statistics examples") {
  auto f7 = fiber_statistics(7);
  REQUIRE(f7.size() == 2);
  CHECK(f7.at(2) == 3);
  CHECK(f7.at(4) == 3);

  auto f13 = fiber_statistics(13);
  REQUIRE(f13.size() == 2);
  u64 total = 0;
  u64 first = f13.begin()->second;
  for (auto& [root, cnt] : f13) {
    CHECK(cnt == first);  // equal fibers across roots
    total += cnt;
  }
  CHECK(total == enumerate_representations(13).size());

  CHECK(fiber_statistics(11).empty());
  CHECK(enumerate_representations(11).empty());
  CHECK_THROWS_AS(fiber_statistics(9), std::domain_error);
}

TEST_CASE("fibers are balanced across roots for valid n <= 2000") {
  for (u64 n = 7; n <= 2000; ++n) {
    if (n % 3 == 0) continue;
    auto fibers = fiber_statistics(n);
    if (fibers.empty()) continue;
    u64 first = fibers.begin()->second;
    u64 total = 0;
    for (auto& [root, cnt] : fibers) {
      CHECK(cnt == first);
      total += cnt;
    }
    CHECK(total == enumerate_representations(n).size());
  }
}
