#include "centred/asymptotics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace centred;

TEST_CASE("u_asymptotic_log examples") {
  CHECK(u_asymptotic_log(0, 10) == doctest::Approx(10 * std::numbers::ln2).epsilon(1e-14));
  CHECK(u_asymptotic_log(1, 100) ==
        doctest::Approx(100 * std::numbers::ln2 + 0.5 * std::log(50 / std::numbers::pi))
            .epsilon(1e-14));
  CHECK(u_asymptotic_log(2, 8) == doctest::Approx(std::log(512.0)).epsilon(1e-14));
  CHECK_THROWS_AS(u_asymptotic_log(1, 0), DomainError);
}

TEST_CASE("error scans") {
  const long r1_ns[] = {50, 100, 200, 400};
  auto r1 = asymptotic_error_scan(1, r1_ns);
  for (std::size_t i = 1; i < r1.size(); ++i)
    CHECK(r1[i].rel_error < r1[i - 1].rel_error);

  const long r0_ns[] = {1, 7, 300, 5000};
  for (const auto &rep : asymptotic_error_scan(0, r0_ns))
    CHECK(rep.rel_error < 1e-12);

  const long r3_ns[] = {100, 200};
  auto r3 = asymptotic_error_scan(3, r3_ns);
  double ratio = r3[1].rel_error / r3[0].rel_error;
  CHECK(ratio >= 0.35);
  CHECK(ratio <= 0.65);
}

TEST_CASE("exact_log is finite past the double range") {
  const long ns[] = {3000};
  auto rep = asymptotic_error_scan(4, ns).front();
  CHECK(std::isfinite(rep.exact_log));
  CHECK(rep.exact_log == doctest::Approx(rep.approx_log).epsilon(1e-6));
}

TEST_CASE("U_2(n) = n 2^(n-2) makes r = 2 exact") {
  const long ns[] = {50, 100, 1600};
  for (const auto &rep : asymptotic_error_scan(2, ns))
    CHECK(rep.rel_error < 1e-12);
  CHECK(approximation_is_exact(2));
  CHECK_FALSE(approximation_is_exact(4));
}

TEST_CASE("bad scan inputs") {
  std::vector<long> empty;
  CHECK_THROWS_AS(asymptotic_error_scan(1, empty), DomainError);
  const long descending[] = {100, 50};
  CHECK_THROWS_AS(asymptotic_error_scan(1, descending), DomainError);
}

TEST_CASE("leading-coefficient form of the odd-even case") {
  for (long r = 0; r <= 3; ++r)
    CHECK(odd_even_leading_rel_error(r, 200) < 0.02);
}
