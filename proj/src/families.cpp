#include "centred/families.hpp"

#include "centred/direct.hpp"
#include "centred/series.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace centred {

std::string_view family_name(FamilyId f) {
  switch (f) {
  case FamilyId::P:
    return "P";
  case FamilyId::Pbar:
    return "Pbar";
  case FamilyId::Q:
    return "Q";
  case FamilyId::Qbar:
    return "Qbar";
  }
  return "?";
}

FamilyId parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "p")
    return FamilyId::P;
  if (lower == "pbar")
    return FamilyId::Pbar;
  if (lower == "q")
    return FamilyId::Q;
  if (lower == "qbar")
    return FamilyId::Qbar;
  throw DomainError("unknown polynomial family '" + std::string(name) +
                    "' (expected P, Pbar, Q or Qbar)");
}

namespace {

using IP = IntPolynomial;

// Coefficients (a, b) in p_{r+1}(n) = a(n) p_r(n) - b(n) p_r(n-1).
std::pair<IP, IP> recurrence_factors(FamilyId which) {
  const IP n = IP::variable();
  switch (which) {
  case FamilyId::P:
    return {n * n, n * IP::linear(1, -1)};
  case FamilyId::Pbar: {
    IP a = IP::linear(2, -1);
    IP b = IP::linear(1, -1);
    return {a * a, IP::constant(4) * (b * b)};
  }
  case FamilyId::Q:
    return {IP::constant(2) * n * n, n * IP::linear(2, -1)};
  case FamilyId::Qbar: {
    IP a = IP::linear(2, 1);
    return {a * a, IP::constant(2) * n * a};
  }
  }
  throw DomainError("unknown family");
}

} // namespace

IntPolynomial family_poly(FamilyId which, long r) {
  if (r < 0)
    throw DomainError("family_poly: r must be >= 0");
  const auto [a, b] = recurrence_factors(which);
  IP p = IP::constant(1);
  for (long i = 0; i < r; ++i)
    p = a * p - b * p.shifted(BigInt(-1));
  return p;
}

BigRational u_from_family(long r, long n) {
  if (r < 0 || n < 0)
    throw DomainError("u_from_family: needs r >= 0 and n >= 0");
  const long s = r / 2;
  if (r % 2 == 1) {
    if (n % 2 == 0) {
      long m = n / 2;
      if (m == 0)
        return u_direct(r, n);
      BigInt p = family_poly(FamilyId::P, s)(BigInt(m));
      return BigRational(BigInt(m) * p * binomial(2 * m, m));
    }
    long m = (n + 1) / 2;
    BigInt p = family_poly(FamilyId::Pbar, s)(BigInt(m));
    return pow2q(-(2 * s + 1)) * BigRational(BigInt(m) * p * binomial(2 * m, m));
  }
  if (n % 2 == 0) {
    long m = n / 2;
    return pow2q(2 * m - s) * BigRational(family_poly(FamilyId::Q, s)(BigInt(m)));
  }
  long m = (n - 1) / 2;
  return pow2q(2 * m + 1 - 2 * s) * BigRational(family_poly(FamilyId::Qbar, s)(BigInt(m)));
}

BigRational q_at_half_integer(long r, long n) {
  if (r < 0 || n < 0)
    throw DomainError("q_at_half_integer: needs r >= 0 and n >= 0");
  BigRational x = rational(n, 2);
  return pow2q(n - r) * family_poly(FamilyId::Q, r)(x);
}

SpecialValues special_values(FamilyId which, long r) {
  IntPolynomial p = family_poly(which, r);
  return {p[0], p(BigInt(1)), p.leading()};
}

SpecialValues special_values_closed_form(FamilyId which, long r) {
  if (r < 0)
    throw DomainError("special_values_closed_form: r must be >= 0");
  const BigInt delta = r == 0 ? 1 : 0;
  switch (which) {
  case FamilyId::P:
    return {delta, 1, factorial(r)};
  case FamilyId::Q: {
    // max(1, 2^{r-1}); 2^{-1} < 1 covers r = 0
    BigInt at_one = r == 0 ? BigInt(1) : pow2(static_cast<unsigned long>(r - 1));
    return {delta, at_one, factorial(2 * r) / (pow2(static_cast<unsigned long>(r)) * factorial(r))};
  }
  case FamilyId::Pbar: {
    BigInt secant = secant_numbers(r + 1).back();
    return {sign_pow(r) * (2 * r + 1) * secant, 1,
            pow2(2UL * static_cast<unsigned long>(r)) * factorial(r)};
  }
  case FamilyId::Qbar:
    return {1, (ipow(3, 2UL * static_cast<unsigned long>(r)) + 3) / 4,
            factorial(2 * r) / factorial(r)};
  }
  throw DomainError("unknown family");
}

std::vector<BigInt> secant_numbers(long count) {
  if (count < 1)
    throw DomainError("secant_numbers: count must be >= 1");
  PowerSeries sec = series_elementary(Elementary::Sec, 1, 2 * (count - 1));
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long r = 0; r < count; ++r) {
    BigRational v = sec.egf_coefficient(2 * r);
    if (!is_integer(v))
      throw std::logic_error("secant number is not integral: " + to_string(v));
    out.push_back(v.get_num());
  }
  return out;
}

// Sign conventions: Genocchi numbers come out as -1, 1, -3, 17, ... and the
// reduced tangent numbers as 1, 1, 4, 34, ..., both read from the linear
// coefficient of the family polynomial.
std::vector<BigInt> classic_sequence(ClassicSequence kind, long count) {
  if (count < 1)
    throw DomainError("classic_sequence: count must be >= 1");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  switch (kind) {
  case ClassicSequence::Genocchi:
    for (long r = 1; r <= count; ++r)
      out.push_back(-family_poly(FamilyId::P, r)[1]);
    break;
  case ClassicSequence::ReducedTangent:
    for (long r = 1; r <= count; ++r)
      out.push_back(sign_pow(r - 1) * family_poly(FamilyId::Q, r)[1]);
    break;
  case ClassicSequence::PbarAtZero:
    for (long r = 0; r < count; ++r)
      out.push_back(family_poly(FamilyId::Pbar, r)[0]);
    break;
  }
  return out;
}

std::vector<BigInt> pbar_at_zero_from_egf(long count) {
  if (count < 1)
    throw DomainError("pbar_at_zero_from_egf: count must be >= 1");
  const long order = 2 * count - 1;
  PowerSeries f = PowerSeries::variable(order) *
                  series_elementary(Elementary::Cosh, 1, order).reciprocal();
  std::vector<BigInt> out;
  for (long r = 0; r < count; ++r) {
    BigRational v = f.egf_coefficient(2 * r + 1);
    if (!is_integer(v))
      throw std::logic_error("x/cosh x coefficient is not integral: " + to_string(v));
    out.push_back(v.get_num());
  }
  return out;
}

} // namespace centred
