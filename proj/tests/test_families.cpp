#include "centred/direct.hpp"
#include "centred/families.hpp"
#include "centred/series.hpp"
#include "centred/suites.hpp"

#include <doctest.h>

using namespace centred;

TEST_CASE("family_poly examples") {
  CHECK(format_plain(family_poly(FamilyId::Pbar, 1)) == "4n - 3");
  CHECK(format_plain(family_poly(FamilyId::Qbar, 0)) == "1");
  CHECK(format_factored(family_poly(FamilyId::Q, 5)) ==
        "n(945n^4 - 3150n^3 + 4095n^2 - 2370n + 496)");
  CHECK(format_factored(family_poly(FamilyId::Q, 4)) == "n(105n^3 - 210n^2 + 147n - 34)");
}

TEST_CASE("published small cases") {
  for (const auto &pub : published_polynomials()) {
    std::vector<BigInt> c(pub.coefficients.begin(), pub.coefficients.end());
    CHECK(family_poly(pub.family, pub.r) == IntPolynomial(c));
  }
  CHECK(published_polynomials().size() == 24);
}

TEST_CASE("degree and divisibility") {
  for (FamilyId f : kAllFamilies)
    for (long r = 0; r <= 12; ++r)
      REQUIRE(family_poly(f, r).degree() == r);
  for (long r = 1; r <= 12; ++r) {
    CHECK(family_poly(FamilyId::P, r)[0] == 0);
    CHECK(family_poly(FamilyId::Q, r)[0] == 0);
  }
}

TEST_CASE("u_from_family") {
  CHECK(u_from_family(3, 4) == 24);
  CHECK(u_from_family(2, 3) == 6);
  CHECK(u_from_family(1, 1) == 1);
  CHECK(u_from_family(5, 0) == 0);
  CHECK(u_from_family(0, 0) == 1);
  for (long r = 0; r <= 10; ++r)
    for (long n = 0; n <= 40; ++n)
      REQUIRE(u_from_family(r, n) == u_direct(r, n));
}

TEST_CASE("q_at_half_integer and the bridge") {
  CHECK(q_at_half_integer(1, 3) == 6);
  CHECK(q_at_half_integer(0, 7) == 128);
  CHECK(family_poly(FamilyId::Qbar, 2)(BigInt(1)) == 21);
  CHECK(to_rational(family_poly(FamilyId::Q, 2))(rational(3, 2)) * 4 == 21);
  for (long r = 0; r <= 8; ++r)
    for (long n = 0; n <= 25; ++n)
      REQUIRE(q_at_half_integer(r, n) == u_direct(2 * r, n));
  for (long r = 0; r <= 10; ++r) {
    RatPolynomial bridge =
        to_rational(family_poly(FamilyId::Q, r)).compose(RatPolynomial::linear(1, rational(1, 2))) *
        pow2q(r);
    CHECK(to_integer(bridge) == family_poly(FamilyId::Qbar, r));
  }
}

TEST_CASE("special values") {
  CHECK(special_values(FamilyId::Pbar, 2).at_zero == 25);
  CHECK(special_values(FamilyId::Qbar, 2).at_one == 21);
  CHECK(special_values(FamilyId::P, 4).leading == 24);
  for (FamilyId f : kAllFamilies)
    for (long r = 0; r <= 8; ++r)
      CHECK(special_values(f, r) == special_values_closed_form(f, r));
}

TEST_CASE("secant numbers") {
  auto s = secant_numbers(8);
  REQUIRE(s.size() == 8);
  CHECK(s[0] == 1);
  CHECK(s[2] == 5);
  CHECK(s[3] == 61);
  CHECK(s[7] == BigInt("199360981"));
}

TEST_CASE("classic sequences") {
  auto g = classic_sequence(ClassicSequence::Genocchi, 5);
  CHECK(g == std::vector<BigInt>{-1, 1, -3, 17, -155});
  auto t = classic_sequence(ClassicSequence::ReducedTangent, 5);
  CHECK(t == std::vector<BigInt>{1, 1, 4, 34, 496});
  auto z = classic_sequence(ClassicSequence::PbarAtZero, 3);
  CHECK(z == std::vector<BigInt>{1, -3, 25});
  CHECK(pbar_at_zero_from_egf(11) == classic_sequence(ClassicSequence::PbarAtZero, 11));
}

TEST_CASE("family names") {
  CHECK(parse_family("qbar") == FamilyId::Qbar);
  CHECK(parse_family("P") == FamilyId::P);
  CHECK_THROWS_AS(parse_family("R"), DomainError);
  CHECK(family_name(FamilyId::Pbar) == "Pbar");
}
