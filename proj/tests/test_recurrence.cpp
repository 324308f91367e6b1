#include "centred/direct.hpp"
#include "centred/recurrence.hpp"

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <thread>

using namespace centred;

TEST_CASE("u_recurrence examples") {
  CHECK(u_recurrence(1, 5) == 30);
  CHECK(u_recurrence(2, 2) == 2);
  CHECK(u_recurrence(0, 0) == 1);
}

TEST_CASE("s_recurrence examples") {
  CHECK(s_recurrence(3, 1) == 2);
  CHECK(s_recurrence(2, 1) == 2);
  CHECK(s_recurrence(0, 4) == 256);
}

TEST_CASE("recurrence agrees with the definition") {
  RecurrenceTable table(SumKind::U);
  for (long r = 0; r <= 12; ++r)
    for (long n = 0; n <= 60; ++n)
      REQUIRE(table.value(r, n) == u_direct(r, n));
  for (long r = 0; r <= 12; ++r)
    for (long n = 0; n <= 30; ++n)
      REQUIRE(s_recurrence(r, n) == u_recurrence(r, 2 * n));
}

TEST_CASE("seeds in the memo match their closed forms") {
  RecurrenceTable table(SumKind::U);
  table.value(9, 20);
  for (auto [r, n] : table.keys()) {
    if (r == 0)
      CHECK(*table.lookup(r, n) == pow2q(n));
    if (r == 1)
      CHECK(*table.lookup(r, n) == u_direct(1, n));
  }
}

TEST_CASE("even and odd towers never mix") {
  RecurrenceTable even(SumKind::U);
  even.value(10, 21);
  for (auto [r, n] : even.keys()) {
    CHECK(r % 2 == 0);
    CHECK(n % 2 == 1);
  }
  RecurrenceTable odd(SumKind::U);
  odd.value(7, 12);
  for (auto [r, n] : odd.keys()) {
    CHECK(r % 2 == 1);
    CHECK(n % 2 == 0);
  }
  RecurrenceTable s(SumKind::S);
  s.value(8, 5);
  for (auto [r, n] : s.keys())
    CHECK(r % 2 == 0);
}

TEST_CASE("cap stops memo growth without changing values") {
  RecurrenceTable capped(SumKind::U, 5);
  CHECK(capped.value(8, 30) == u_direct(8, 30));
  CHECK(capped.size() <= 5);
  CHECK(capped.value(8, 30) == u_direct(8, 30));

  setenv("CENTRED_SUMS_CACHE_CAP", "3", 1);
  RecurrenceTable env = RecurrenceTable::from_environment(SumKind::S);
  CHECK(env.value(6, 10) == s_direct(6, 10));
  CHECK(env.size() <= 3);
  unsetenv("CENTRED_SUMS_CACHE_CAP");
}

TEST_CASE("negative arguments are rejected") {
  RecurrenceTable table(SumKind::U);
  CHECK_THROWS_AS(table.value(-1, 3), DomainError);
  CHECK_THROWS_AS(table.value(2, -3), DomainError);
}

TEST_CASE("concurrent readers see complete entries") {
  RecurrenceTable table(SumKind::U);
  std::vector<std::jthread> workers;
  std::atomic<int> bad{0};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (long n = 0; n <= 40; ++n)
        if (table.value(4 + t, n) != u_direct(4 + t, n))
          ++bad;
    });
  workers.clear();
  CHECK(bad == 0);
}
