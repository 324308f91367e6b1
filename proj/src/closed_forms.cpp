#include "centred/closed_forms.hpp"

#include "centred/dumont_foata.hpp"
#include "centred/families.hpp"
#include "centred/recurrence.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <thread>

namespace centred {

std::string_view formula_name(FormulaId f) {
  switch (f) {
  case FormulaId::EvenA2:
    return "EvenA2";
  case FormulaId::EvenB2:
    return "EvenB2";
  case FormulaId::OddEven2:
    return "OddEven2";
  case FormulaId::OddOdd2:
    return "OddOdd2";
  case FormulaId::LagrangeEven:
    return "LagrangeEven";
  case FormulaId::LagrangeOddEven:
    return "LagrangeOddEven";
  case FormulaId::LagrangeOddOdd:
    return "LagrangeOddOdd";
  case FormulaId::GZEven:
    return "GZEven";
  case FormulaId::GZOdd:
    return "GZOdd";
  }
  return "?";
}

Method formula_method(FormulaId f) {
  switch (f) {
  case FormulaId::EvenA2:
  case FormulaId::EvenB2:
  case FormulaId::OddEven2:
  case FormulaId::OddOdd2:
    return Method::Carlitz;
  case FormulaId::LagrangeEven:
  case FormulaId::LagrangeOddEven:
  case FormulaId::LagrangeOddOdd:
    return Method::Lagrange;
  case FormulaId::GZEven:
  case FormulaId::GZOdd:
    return Method::GuoZeng;
  }
  return Method::Direct;
}

FormulaTarget formula_target(FormulaId f, long r, long n) {
  switch (f) {
  case FormulaId::EvenA2:
  case FormulaId::EvenB2:
  case FormulaId::LagrangeEven:
    return {SumKind::U, 2 * r, n};
  case FormulaId::OddEven2:
  case FormulaId::LagrangeOddEven:
    return {SumKind::U, 2 * r + 1, 2 * n};
  case FormulaId::OddOdd2:
  case FormulaId::LagrangeOddOdd:
    return {SumKind::U, 2 * r - 1, 2 * n - 1};
  case FormulaId::GZEven:
    return {SumKind::S, 2 * r, n};
  case FormulaId::GZOdd:
    return {SumKind::S, 2 * r - 1, n};
  }
  return {SumKind::U, r, n};
}

namespace {

// Smallest admissible n per formula; every formula needs r >= 1.
long min_n(FormulaId f) {
  switch (f) {
  case FormulaId::LagrangeOddEven:
  case FormulaId::GZEven:
  case FormulaId::GZOdd:
    return 0;
  default:
    return 1;
  }
}

const char *target_text(FormulaId f) {
  switch (f) {
  case FormulaId::EvenA2:
  case FormulaId::EvenB2:
  case FormulaId::LagrangeEven:
    return "U_{2r}(n)";
  case FormulaId::OddEven2:
  case FormulaId::LagrangeOddEven:
    return "U_{2r+1}(2n)";
  case FormulaId::OddOdd2:
  case FormulaId::LagrangeOddOdd:
    return "U_{2r-1}(2n-1)";
  case FormulaId::GZEven:
    return "S_{2r}(n)";
  case FormulaId::GZOdd:
    return "S_{2r-1}(n)";
  }
  return "?";
}

BigRational fact(long k) { return BigRational(factorial(k)); }
BigRational binom(long n, long k) { return BigRational(binomial(n, k)); }
BigRational half() { return rational(1, 2); }
unsigned long upow(long e) { return static_cast<unsigned long>(e); }

using TermFn = std::function<BigRational(long j, long k)>;

std::vector<FormulaTerm> collect(long j_lo, long k_lo, long k_hi, const TermFn &term) {
  std::vector<FormulaTerm> out;
  for (long k = k_lo; k <= k_hi; ++k)
    for (long j = j_lo; j <= k; ++j)
      out.push_back({j, k, term(j, k)});
  return out;
}

std::vector<FormulaTerm> gz_odd_terms(long r, long n, long k_hi) {
  // C(2n-2k, n-k) is zero once the lower index n-k is negative
  return collect(0, 0, k_hi, [&](long j, long k) -> BigRational {
    if (n - k < 0)
      return 0;
    return sign_pow(k - j) * binom(2 * n - 2 * k, n - k) * binom(2 * n, j) *
           pochhammer(2 * n - 2 * k, k - j) / fact(k - j) *
           qpow(BigRational(n - j), upow(2 * r - 1));
  });
}

} // namespace

std::string formula_validity(FormulaId f) {
  return std::string(formula_name(f)) + " evaluates " + target_text(f) +
         " for r >= 1 and n >= " + std::to_string(min_n(f)) +
         "; use the direct method outside that range";
}

bool formula_applies(FormulaId f, long r, long n) { return r >= 1 && n >= min_n(f); }

std::vector<FormulaTerm> formula_terms(FormulaId f, long r, long n) {
  if (!formula_applies(f, r, n))
    throw DomainError("(r=" + std::to_string(r) + ", n=" + std::to_string(n) +
                      ") is outside the stated range: " + formula_validity(f));
  const BigRational h = half();
  switch (f) {
  case FormulaId::EvenA2: {
    const BigRational pre = pow2q(n + 1);
    return collect(1, 1, r, [&](long j, long k) -> BigRational {
      return pre * sign_pow(j) * pochhammer(rational(-n, 2), k) * pochhammer(h, k) /
             (fact(k - j) * fact(k + j)) * BigRational(ipow(j, upow(2 * r)));
    });
  }
  case FormulaId::EvenB2: {
    const BigRational pre = pow2q(n) * n;
    return collect(1, 1, r, [&](long j, long k) -> BigRational {
      return pre * sign_pow(j - 1) * pochhammer(rational(1 - n, 2), k - 1) *
             pochhammer(h, k) / (fact(k + j - 1) * fact(k - j)) *
             qpow(BigRational(j) - h, upow(2 * r - 1));
    });
  }
  case FormulaId::OddEven2: {
    const BigRational pre = 2 * n * binom(2 * n, n);
    return collect(1, 1, r, [&](long j, long k) -> BigRational {
      return pre * sign_pow(j) * pochhammer(-n, k) /
             (fact(k - j) * pochhammer(k + 1, j)) * BigRational(ipow(j, upow(2 * r)));
    });
  }
  case FormulaId::OddOdd2: {
    const BigRational pre = binom(2 * n, n);
    return collect(1, 1, r, [&](long j, long k) -> BigRational {
      return pre * sign_pow(j) * pochhammer(-n, k) / (fact(k - j) * pochhammer(k, j)) *
             qpow(BigRational(j) - h, upow(2 * r - 1));
    });
  }
  case FormulaId::LagrangeEven: {
    const BigRational pre = sign_pow(r) * pow2q(n + 1);
    return collect(1, 1, r, [&](long j, long k) -> BigRational {
      return pre * pochhammer(rational(-n, 2), k) * pochhammer(h, k) *
             pochhammer(rational(n, 2) - r, r - k) /
             (fact(k + j) * fact(k - j) * fact(r - k)) * BigRational(ipow(j, upow(2 * r)));
    });
  }
  case FormulaId::LagrangeOddEven: {
    const BigRational pre = 2 * n * binom(2 * n, n) * sign_pow(r);
    return collect(1, 1, r, [&](long j, long k) -> BigRational {
      return pre * pochhammer(-n, k) * pochhammer(n - r, r - k) /
             (fact(r - k) * fact(k - j) * pochhammer(k, j + 1)) *
             BigRational(ipow(j, upow(2 * r + 1)));
    });
  }
  case FormulaId::LagrangeOddOdd: {
    const BigRational pre = sign_pow(r) * binom(2 * n, n);
    return collect(0, 0, r, [&](long j, long k) -> BigRational {
      return pre * pochhammer(1 - n, k) * pochhammer(n - 1 - r, r - k) /
             (fact(r - k) * fact(k - j) * pochhammer(k + 2, j)) *
             qpow(BigRational(j) + h, upow(2 * r - 1));
    });
  }
  case FormulaId::GZEven:
    return collect(0, 0, r - 1, [&](long j, long k) -> BigRational {
      return pow2q(2 * n - 2 * k - 1) * sign_pow(k - j) * binom(2 * n, j) *
             pochhammer(2 * n - 2 * k, k - j) / fact(k - j) *
             qpow(BigRational(n - j), upow(2 * r - 1));
    });
  case FormulaId::GZOdd:
    return gz_odd_terms(r, n, std::min(r - 1, n));
  }
  return {};
}

BigRational u_closed(FormulaId f, long r, long n) {
  BigRational sum = 0;
  for (const auto &t : formula_terms(f, r, n))
    sum += t.value;
  return sum;
}

BigRational gz_odd_uncapped(long r, long n, long k_max) {
  if (!formula_applies(FormulaId::GZOdd, r, n))
    throw DomainError(formula_validity(FormulaId::GZOdd));
  BigRational sum = 0;
  for (const auto &t : gz_odd_terms(r, n, k_max))
    sum += t.value;
  return sum;
}

std::vector<FormulaUse> formulas_for(long order, long argument) {
  std::vector<FormulaUse> out;
  auto push = [&](FormulaId f, long r, long n) {
    if (formula_applies(f, r, n))
      out.push_back({f, r, n});
  };
  if (order < 0 || argument < 0)
    return out;
  if (order % 2 == 0) {
    const long r = order / 2;
    push(FormulaId::EvenA2, r, argument);
    push(FormulaId::EvenB2, r, argument);
    push(FormulaId::LagrangeEven, r, argument);
    if (argument % 2 == 0)
      push(FormulaId::GZEven, r, argument / 2);
  } else if (argument % 2 == 0) {
    const long r = (order - 1) / 2;
    push(FormulaId::OddEven2, r, argument / 2);
    push(FormulaId::LagrangeOddEven, r, argument / 2);
    push(FormulaId::GZOdd, (order + 1) / 2, argument / 2);
  } else {
    const long r = (order + 1) / 2;
    const long m = (argument + 1) / 2;
    push(FormulaId::OddOdd2, r, m);
    push(FormulaId::LagrangeOddOdd, r, m);
  }
  return out;
}

namespace {

std::string cell_id(long order, long argument, std::string_view route) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "cross/U_%03ld(%03ld)/", order, argument);
  return buf + std::string(route);
}

std::vector<Check> validate_cell(long order, long argument) {
  const BigRational expected = u_direct(order, argument);
  const std::string expected_text = to_string(expected);
  std::vector<Check> out;
  auto record = [&](std::string route, const std::function<BigRational()> &eval) {
    Check c;
    c.id = cell_id(order, argument, route);
    c.inputs = {{"order", std::to_string(order)},
                {"argument", std::to_string(argument)},
                {"route", route}};
    c.expected = expected_text;
    try {
      BigRational v = eval();
      c.actual = to_string(v);
      c.ok = v == expected;
    } catch (const std::exception &e) {
      c.actual = std::string("error: ") + e.what();
      c.ok = false;
    }
    out.push_back(std::move(c));
  };

  if (order >= 1)
    record("halfrange", [&] { return u_direct_halfrange(order, argument); });
  record("recurrence", [&] { return u_recurrence(order, argument); });
  record("family", [&] { return u_from_family(order, argument); });
  if (df_route_applies(order, argument))
    record("df", [&] { return u_from_df(order, argument); });
  for (const auto &use : formulas_for(order, argument))
    record(std::string(formula_name(use.formula)),
           [&] { return u_closed(use.formula, use.r, use.n); });
  return out;
}

} // namespace

Report cross_validate(long r_max, long n_max, unsigned jobs) {
  if (r_max < 0 || n_max < 0)
    throw DomainError("cross_validate: bounds must be >= 0");
  const std::size_t width = static_cast<std::size_t>(n_max + 1);
  const std::size_t cells = static_cast<std::size_t>(r_max + 1) * width;
  std::vector<std::vector<Check>> results(cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++)
      results[i] = validate_cell(static_cast<long>(i / width), static_cast<long>(i % width));
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
  }
  Report report;
  for (auto &cell : results)
    for (auto &c : cell)
      report.add(std::move(c));
  return report;
}

} // namespace centred
