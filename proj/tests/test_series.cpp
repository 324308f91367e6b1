#include "centred/direct.hpp"
#include "centred/series.hpp"

#include <doctest.h>

using namespace centred;

namespace {

PowerSeries make(long order, std::vector<BigRational> c) { return PowerSeries(order, std::move(c)); }

bool only_parity(const PowerSeries &s, int parity) {
  for (long i = 0; i <= s.order(); ++i)
    if (i % 2 != parity && s[i] != 0)
      return false;
  return true;
}

} // namespace

TEST_CASE("elementary series examples") {
  CHECK(series_elementary(Elementary::Cosh, 1, 4) ==
        make(4, {1, 0, rational(1, 2), 0, rational(1, 24)}));
  CHECK(series_elementary(Elementary::Sinh, rational(1, 2), 3) ==
        make(3, {0, rational(1, 2), 0, rational(1, 48)}));
  CHECK(series_elementary(Elementary::Sec, 1, 6) ==
        make(6, {1, 0, rational(1, 2), 0, rational(5, 24), 0, rational(61, 720)}));
}

TEST_CASE("series self tests") {
  const long order = 20;
  auto ch = series_elementary(Elementary::Cosh, rational(1, 2), order);
  auto sh = series_elementary(Elementary::Sinh, rational(1, 2), order);
  CHECK(ch * ch - sh * sh == PowerSeries::one(order));
  auto e = series_elementary(Elementary::Exp, 1, order);
  auto em = series_elementary(Elementary::Exp, -1, order);
  CHECK(e * em == PowerSeries::one(order));
  CHECK(e.reciprocal() == em);
  CHECK(only_parity(ch, 0));
  CHECK(only_parity(ch.pow(5), 0));
  CHECK(only_parity(sh, 1));
  CHECK(only_parity(series_elementary(Elementary::Sec, 3, order), 0));
  CHECK(PowerSeries::variable(0) == PowerSeries(0));
  CHECK_THROWS(PowerSeries(3).reciprocal());
}

TEST_CASE("even egf") {
  auto r1 = verify_egf_even(1, 4);
  CHECK(r1.passed());
  CHECK(r1.checks[2].actual == "1/2");
  CHECK(r1.checks[4].actual == "1/8");
  auto r0 = verify_egf_even(0, 8);
  CHECK(r0.passed());
  for (std::size_t i = 1; i < r0.checks.size(); ++i)
    CHECK(r0.checks[i].actual == "0");
  CHECK(verify_egf_even(6, 20).passed());
}

TEST_CASE("S egf") {
  auto r1 = verify_egf_s_even(1, 4);
  CHECK(r1.passed());
  CHECK(r1.checks[0].actual == "4");
  CHECK(r1.checks[2].actual == "2");
  CHECK(r1.checks[4].actual == "2");
  auto r0 = verify_egf_s_even(0, 2);
  CHECK(r0.checks[0].actual == "1");
  CHECK(r0.checks[2].actual == "0");
  CHECK(verify_egf_s_even(3, 12).passed());
}

TEST_CASE("sinh/cosh identity") {
  auto r2 = verify_sinh_cosh_identity(2, 8);
  CHECK(r2.passed());
  CHECK(r2.notes["last_nonzero_k"] == "1");
  CHECK(verify_sinh_cosh_identity(0, 6).passed());
  auto r5 = verify_sinh_cosh_identity(5, 12);
  CHECK(r5.passed());
  CHECK(r5.notes["last_nonzero_k"] == "6");
}

TEST_CASE("odd-even egf") {
  auto r = verify_egf_odd_even(1, 0);
  CHECK(r.passed());
  CHECK(r.checks[0].actual == "2");
  CHECK(verify_egf_odd_even(2, 6).passed());
  CHECK(verify_egf_odd_even(1, 4).passed());
  CHECK_THROWS_AS(verify_egf_odd_even(0, 4), DomainError);
}

TEST_CASE("odd-odd egf") {
  auto r1 = verify_egf_odd_odd(1, 5);
  CHECK(r1.passed());
  // U_1(1) = 1, U_3(1) = 1/4, U_5(1) = 1/16, U_1(3) = 6, U_3(3) = 15/2 from the defining sum
  CHECK(r1.checks[1].actual == "1");
  CHECK(r1.checks[3].actual == "1/4");
  CHECK(r1.checks[5].actual == "1/16");
  CHECK(u_direct(3, 1) == rational(1, 4));
  auto r2 = verify_egf_odd_odd(2, 3);
  CHECK(r2.passed());
  CHECK(r2.checks[1].actual == "6");
  CHECK(r2.checks[3].actual == "15/2");
  for (long n = 1; n <= 5; ++n) {
    auto r = verify_egf_odd_odd(n, 12);
    CHECK(r.passed());
    for (std::size_t i = 0; i < r.checks.size(); i += 2)
      CHECK(r.checks[i].actual == "0");
  }
}

TEST_CASE("Carlitz egf") {
  CHECK(verify_carlitz_egf(1, 1, 8).passed());
  CHECK(verify_carlitz_egf(rational(1, 2), 1, 6).passed());
  auto vacuous = verify_carlitz_egf(rational(2, 3), 5, 0);
  CHECK(vacuous.passed());
  CHECK(vacuous.checks.size() == 1);
  CHECK_THROWS_AS(verify_carlitz_egf(0, 1, 4), DomainError);
  CHECK_THROWS_AS(verify_carlitz_egf(1, 0, 4), DomainError);
}
