#include "centred/direct.hpp"
#include "centred/dumont_foata.hpp"
#include "centred/families.hpp"

#include <doctest.h>

using namespace centred;

TEST_CASE("df_poly examples") {
  CHECK(df_poly(1).to_string() == "1");
  CHECK(df_poly(2).to_string() == "x*y + x*z + y*z");
  // Summing F_3 = (x+z)(y+z)F_2(x,y,z+1) - z^2 F_2 at (1,1,1):
  // 4 * F_2(1,1,2) - F_2(1,1,1) = 4*5 - 3 = 17.
  CHECK(df_eval(3, 1, 1, 1) == 17);
  CHECK(df_carlitz(3, 1, 1, 1) == 17);
  CHECK_THROWS_AS(df_poly(0), DomainError);
}

TEST_CASE("df_eval examples") {
  CHECK(df_eval(2, 1, 1, 1) == 3);
  CHECK(df_eval(5, rational(1, 2), rational(1, 2), rational(1, 2)) == rational(1385 * 9, 256));
  CHECK(df_eval(1, rational(-7, 3), 11, rational(2, 9)) == 1);
}

TEST_CASE("df_carlitz examples") {
  CHECK(df_carlitz(2, 1, 1, 1) == 3);
  CHECK(df_carlitz(3, rational(1, 2), rational(1, 2), rational(1, 2)) == rational(25, 16));
  CHECK_THROWS_AS(df_carlitz(2, 1, 1, rational(-1, 2)), DomainError);
}

TEST_CASE("structure of F_r") {
  for (long r = 1; r <= 7; ++r) {
    const auto &f = df_poly(r);
    for (int v = 0; v < 3; ++v)
      CHECK(f.degree_in(v) == r - 1);
    for (const auto &[e, c] : f.terms())
      CHECK(c > 0);
    CHECK(f.permuted({1, 2, 0}) == f);
    CHECK(f.permuted({1, 0, 2}) == f);
  }
}

TEST_CASE("family_from_df") {
  CHECK(format_factored(family_from_df(FamilyId::P, 2)) == "n(2n - 1)");
  CHECK(format_plain(family_from_df(FamilyId::Pbar, 1)) == "4n - 3");
  CHECK(format_plain(family_from_df(FamilyId::Q, 1)) == "n");
  for (FamilyId f : kAllFamilies)
    for (long r = 1; r <= 8; ++r)
      CHECK(family_from_df(f, r) == family_poly(f, r));
}

TEST_CASE("u_from_df") {
  CHECK(u_from_df(2, 3) == 6);
  CHECK(u_from_df(1, 1) == 1);
  CHECK(u_from_df(3, 4) == 24);
  CHECK_FALSE(df_route_applies(0, 4));
  CHECK_FALSE(df_route_applies(1, 2));
  CHECK(df_route_applies(1, 3));
  CHECK_THROWS_AS(u_from_df(0, 4), DomainError);
  CHECK_THROWS_AS(u_from_df(4, 0), DomainError);
  for (long order = 0; order <= 15; ++order)
    for (long n = 0; n <= 30; ++n)
      if (df_route_applies(order, n))
        REQUIRE(u_from_df(order, n) == u_direct(order, n));
}
