// Coefficient-by-coefficient checks of the exponential generating functions.

#include "centred/direct.hpp"
#include "centred/dumont_foata.hpp"
#include "centred/series.hpp"

#include <cstdio>

namespace centred {

namespace {

std::string coeff_id(const char *family, long n, long power) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "egf/%s/n=%03ld/z^%03ld", family, n, power);
  return buf;
}

Check compare(std::string id, std::map<std::string, std::string> inputs,
              const BigRational &expected, const BigRational &actual) {
  Check c;
  c.id = std::move(id);
  c.inputs = std::move(inputs);
  c.expected = to_string(expected);
  c.actual = to_string(actual);
  c.ok = expected == actual;
  return c;
}

// 2 sinh(s z)
PowerSeries two_sinh(const BigRational &scale, long order) {
  return series_elementary(Elementary::Sinh, scale, order) * BigRational(2);
}

// Even-index egf of a cosh power against U_{2r}(arg) from the definition.
Report verify_cosh_power(const char *family, long n, long argument, long order) {
  if (n < 0 || order < 0)
    throw DomainError("egf check needs n >= 0 and order >= 0");
  PowerSeries rhs =
      series_elementary(Elementary::Cosh, rational(1, 2), order).pow(static_cast<unsigned long>(argument)) *
      pow2q(argument);
  Report report;
  for (long p = 0; p <= order; ++p) {
    BigRational expected = p % 2 == 0 ? u_direct(p, argument) : BigRational(0);
    report.add(compare(coeff_id(family, n, p),
                       {{"n", std::to_string(n)}, {"power", std::to_string(p)}}, expected,
                       rhs.egf_coefficient(p)));
  }
  return report;
}

} // namespace

Report verify_egf_even(long n, long order) { return verify_cosh_power("even", n, n, order); }

Report verify_egf_s_even(long n, long order) {
  return verify_cosh_power("s-even", n, 2 * n, order);
}

Report verify_sinh_cosh_identity(long n, long order) {
  if (n < 0 || order < 0)
    throw DomainError("sinh/cosh identity needs n >= 0 and order >= 0");
  PowerSeries lhs =
      series_elementary(Elementary::Cosh, 1, order).pow(static_cast<unsigned long>(n));
  PowerSeries rhs(order);
  const PowerSeries s2 = two_sinh(1, order).pow(2);
  PowerSeries s2k = PowerSeries::one(order);
  long last_k = 0;
  // (2 sinh z)^{2k} starts at z^{2k}, so k <= order/2 suffices
  for (long k = 0; 2 * k <= order; ++k) {
    BigRational coef = sign_pow(k) * pochhammer(rational(1, 2), k) *
                       pochhammer(rational(-n, 2), k) / BigRational(factorial(2 * k));
    if (coef != 0) {
      rhs += s2k * coef;
      last_k = k;
    }
    s2k = s2k * s2;
  }
  Report report;
  for (long p = 0; p <= order; ++p)
    report.add(compare(coeff_id("sinh-cosh", n, p),
                       {{"n", std::to_string(n)}, {"power", std::to_string(p)}}, lhs[p],
                       rhs[p]));
  report.notes["last_nonzero_k"] = std::to_string(last_k);
  return report;
}

Report verify_egf_odd_even(long n, long order) {
  if (n < 1 || order < 0)
    throw DomainError("odd-even egf needs n >= 1 and order >= 0");
  const PowerSeries sh2 = series_elementary(Elementary::Sinh, rational(1, 2), order).pow(2);
  const BigRational pre = BigRational(n * binomial(2 * n, n));
  // partial[k] = sum of the first k+1 terms, for the min(r, n) truncation check
  std::vector<PowerSeries> partial;
  PowerSeries acc(order), power = PowerSeries::one(order);
  for (long k = 0; k <= n; ++k) {
    BigRational coef = pre * BigRational(ipow(4, static_cast<unsigned long>(k)) * binomial(n, k)) /
                       BigRational(binomial(2 * k, k));
    acc += power * coef;
    partial.push_back(acc);
    power = power * sh2;
  }
  Report report;
  for (long p = 0; p <= order; ++p) {
    std::map<std::string, std::string> in{{"n", std::to_string(n)}, {"power", std::to_string(p)}};
    if (p % 2 == 1) {
      report.add(compare(coeff_id("odd-even", n, p), in, 0, acc.egf_coefficient(p)));
      continue;
    }
    const long r = p / 2;
    const BigRational expected = u_direct(2 * r + 1, 2 * n);
    report.add(compare(coeff_id("odd-even", n, p), in, expected, acc.egf_coefficient(p)));
    const long cut = std::min(r, n);
    report.add(compare(coeff_id("odd-even-truncated", n, p), in, expected,
                       partial[static_cast<std::size_t>(cut)].egf_coefficient(p)));
  }
  return report;
}

Report verify_egf_odd_odd(long n, long order) {
  if (n < 1 || order < 0)
    throw DomainError("odd-odd egf is stated for n >= 1");
  const BigRational pre = BigRational(n * binomial(2 * n, n));
  PowerSeries rhs(order);
  for (long k = 0; k < n; ++k) {
    for (long j = 0; j <= k; ++j) {
      BigRational coef = pre * sign_pow(k - j) *
                         BigRational(binomial(n - 1, k) * binomial(2 * k, k - j)) /
                         BigRational(binomial(2 * k, k)) / BigRational(j + k + 1);
      rhs += series_elementary(Elementary::Sinh, BigRational(j) + rational(1, 2), order) * coef;
    }
  }
  Report report;
  for (long p = 0; p <= order; ++p) {
    BigRational expected = p % 2 == 1 ? u_direct(p, 2 * n - 1) : BigRational(0);
    report.add(compare(coeff_id("odd-odd", n, p),
                       {{"n", std::to_string(n)}, {"power", std::to_string(p)}}, expected,
                       rhs.egf_coefficient(p)));
  }
  return report;
}

Report verify_carlitz_egf(const BigRational &x, const BigRational &y, long order) {
  if (x == 0 || y == 0)
    throw DomainError("Carlitz egf has a 1/(xy) prefactor: x and y must be nonzero");
  if (order < 0)
    throw DomainError("order must be >= 0");
  PowerSeries lhs(order);
  for (long r = 1; 2 * r <= order; ++r)
    lhs[2 * r] = sign_pow(r) * df_eval(r, x, y, 1) / BigRational(factorial(2 * r));

  PowerSeries rhs(order);
  const PowerSeries s2 = two_sinh(rational(1, 2), order).pow(2);
  PowerSeries s2k = s2;
  for (long k = 1; 2 * k <= order; ++k) {
    BigRational coef = sign_pow(k) * pochhammer(x, k) * pochhammer(y, k) /
                       BigRational(factorial(2 * k)) / (x * y);
    rhs += s2k * coef;
    s2k = s2k * s2;
  }
  Report report;
  const std::string tag = "carlitz/x=" + to_string(x) + "/y=" + to_string(y);
  for (long p = 0; p <= order; ++p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "/z^%03ld", p);
    report.add(compare(tag + buf,
                       {{"x", to_string(x)}, {"y", to_string(y)}, {"power", std::to_string(p)}},
                       lhs[p], rhs[p]));
  }
  return report;
}

} // namespace centred
