#include "oracles.hpp"

#include "centred/numeric.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace centred;

TEST_CASE("binomial examples") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(30, 15) == oracle::pascal(30)[30][15]);
  CHECK(binomial(30, 15) == 155117520);
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial follows Pascal's rule up to 64") {
  for (long n = 1; n <= 64; ++n)
    for (long k = 0; k <= n; ++k)
      REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial against an iterative product") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  for (long k = 0; k <= 40; ++k)
    CHECK(factorial(k) == oracle::product_factorial(k));
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(3, 0) == 1);
  CHECK(pochhammer(rational(1, 2), 3) == rational(15, 8));
  CHECK(pochhammer(-2, 4) == 0);
}

TEST_CASE("pochhammer step and falling factorial identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 9) + 1;
    BigRational x = rational(num, den);
    for (long k = 0; k <= 16; ++k)
      REQUIRE(pochhammer(x, k + 1) == pochhammer(x, k) * (x + k));
    for (long k = 0; k <= 12; ++k) {
      BigRational falling = 1;
      for (long i = 0; i < k; ++i)
        falling *= x - i;
      // (x+1-k)_k is the falling factorial x(x-1)...(x-k+1)
      REQUIRE(pochhammer(x + 1 - k, k) == falling);
      REQUIRE(pochhammer(x + 1 - k, k) == sign_pow(k) * pochhammer(-x, k));
    }
  }
}

TEST_CASE("rationals stay canonical and round-trip") {
  CHECK(rational(6, -4) == rational(-3, 2));
  CHECK(rational(6, -4).get_den() == 2);
  CHECK(to_string(rational(0, -7)) == "0");
  CHECK(to_string(rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(rational(1, 0), DomainError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    BigRational a = rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    BigRational c = rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    REQUIRE((a + c) - c == a);
    REQUIRE(parse_rational(to_string(a)) == a);
  }
  CHECK(parse_rational("-10/4") == rational(-5, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("powers and dyadic helpers") {
  CHECK(ipow(0, 0) == 1);
  CHECK(qpow(0, 0) == 1);
  CHECK(qpow(rational(-1, 2), 3) == rational(-1, 8));
  CHECK(pow2q(-3) == rational(1, 8));
  CHECK(pow2(10) == 1024);
  CHECK(dyadic_exponent(rational(3, 16)) == 4);
  CHECK(dyadic_exponent(5) == 0);
  CHECK(dyadic_exponent(rational(1, 6)) == -1);
  CHECK(is_integer(rational(4, 2)));
  CHECK_FALSE(is_integer(rational(1, 2)));
}

TEST_CASE("log_positive beyond the double range") {
  BigRational big = pow2q(5000) * 3;
  CHECK(log_positive(big) == doctest::Approx(5000 * std::log(2.0) + std::log(3.0)).epsilon(1e-13));
  CHECK(log_positive(pow2q(-3000)) == doctest::Approx(-3000 * std::log(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_positive(0), DomainError);
}
