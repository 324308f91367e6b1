#include "centred/suites.hpp"

#include "centred/asymptotics.hpp"
#include "centred/closed_forms.hpp"
#include "centred/dumont_foata.hpp"
#include "centred/series.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

namespace centred {

const std::vector<PublishedPolynomial> &published_polynomials() {
  static const std::vector<PublishedPolynomial> table = {
      {FamilyId::P, 0, {1}},
      {FamilyId::P, 1, {0, 1}},
      {FamilyId::P, 2, {0, -1, 2}},
      {FamilyId::P, 3, {0, 3, -8, 6}},
      {FamilyId::P, 4, {0, -17, 54, -60, 24}},
      {FamilyId::P, 5, {0, 155, -556, 762, -480, 120}},
      {FamilyId::Q, 0, {1}},
      {FamilyId::Q, 1, {0, 1}},
      {FamilyId::Q, 2, {0, -1, 3}},
      {FamilyId::Q, 3, {0, 4, -15, 15}},
      {FamilyId::Q, 4, {0, -34, 147, -210, 105}},
      {FamilyId::Q, 5, {0, 496, -2370, 4095, -3150, 945}},
      {FamilyId::Pbar, 0, {1}},
      {FamilyId::Pbar, 1, {-3, 4}},
      {FamilyId::Pbar, 2, {25, -56, 32}},
      {FamilyId::Pbar, 3, {-427, 1228, -1184, 384}},
      {FamilyId::Pbar, 4, {12465, -41840, 52416, -29184, 6144}},
      {FamilyId::Pbar, 5, {-555731, 2079892, -3076288, 2258688, -829440, 122880}},
      {FamilyId::Qbar, 0, {1}},
      {FamilyId::Qbar, 1, {1, 2}},
      {FamilyId::Qbar, 2, {1, 8, 12}},
      {FamilyId::Qbar, 3, {1, 2, 60, 120}},
      {FamilyId::Qbar, 4, {1, 128, -168, 0, 1680}},
      {FamilyId::Qbar, 5, {1, -2638, 7320, 5040, -25200, 30240}},
  };
  return table;
}

namespace {

std::string padded(const char *prefix, long v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%03ld", prefix, v);
  return buf;
}

Check exact_check(std::string id, std::map<std::string, std::string> inputs,
                  const std::string &expected, const std::string &actual) {
  Check c;
  c.id = std::move(id);
  c.inputs = std::move(inputs);
  c.expected = expected;
  c.actual = actual;
  c.ok = expected == actual;
  return c;
}

std::string join(const std::vector<BigInt> &values) {
  std::string out;
  for (const auto &v : values) {
    if (!out.empty())
      out += ", ";
    out += v.get_str();
  }
  return out;
}

} // namespace

Report suite_closed_forms(long r_max, long n_max, unsigned jobs) {
  return cross_validate(r_max, n_max, jobs);
}

const std::vector<std::pair<BigRational, BigRational>> &carlitz_egf_samples() {
  static const std::vector<std::pair<BigRational, BigRational>> samples = {
      {1, 1},
      {rational(1, 2), 1},
      {rational(-3, 2), rational(2, 3)},
      {rational(5, 7), -4},
      {3, rational(1, 3)},
      {-8, rational(-1, 2)},
  };
  return samples;
}

Report suite_egf(long order, long n_max) {
  Report report;
  for (long n = 0; n <= n_max; ++n) {
    report.append(verify_egf_even(n, order));
    report.append(verify_egf_s_even(n, order));
    Report sc = verify_sinh_cosh_identity(n, order);
    report.notes["sinh-cosh/n=" + std::to_string(n) + "/last_nonzero_k"] =
        sc.notes["last_nonzero_k"];
    sc.notes.clear();
    report.append(sc);
  }
  for (long n = 1; n <= n_max; ++n) {
    report.append(verify_egf_odd_even(n, order));
    report.append(verify_egf_odd_odd(n, order));
  }
  for (const auto &[x, y] : carlitz_egf_samples())
    report.append(verify_carlitz_egf(x, y, order));
  return report;
}

Report suite_tables(long r_max) {
  Report report;
  for (const auto &pub : published_polynomials()) {
    std::vector<BigInt> expected(pub.coefficients.begin(), pub.coefficients.end());
    IntPolynomial built = family_poly(pub.family, pub.r);
    report.add(exact_check(
        "tables/published/" + std::string(family_name(pub.family)) + padded("_", pub.r),
        {{"family", std::string(family_name(pub.family))}, {"r", std::to_string(pub.r)}},
        format_plain(IntPolynomial(expected)), format_plain(built)));
  }

  static constexpr const char *cells[] = {"at_zero", "at_one", "leading"};
  for (FamilyId f : kAllFamilies) {
    for (long r = 0; r <= r_max; ++r) {
      SpecialValues got = special_values(f, r);
      SpecialValues want = special_values_closed_form(f, r);
      const BigInt *g[] = {&got.at_zero, &got.at_one, &got.leading};
      const BigInt *w[] = {&want.at_zero, &want.at_one, &want.leading};
      for (int i = 0; i < 3; ++i)
        report.add(exact_check("tables/special/" + std::string(family_name(f)) + "/" + cells[i] +
                                   padded("/r=", r),
                               {{"family", std::string(family_name(f))},
                                {"r", std::to_string(r)},
                                {"cell", cells[i]}},
                               w[i]->get_str(), g[i]->get_str()));
    }
  }

  // Qbar_r(m) = 2^r Q_r(m + 1/2) as polynomials in m
  for (long r = 0; r <= std::max(r_max, 10L); ++r) {
    RatPolynomial bridge = to_rational(family_poly(FamilyId::Q, r))
                               .compose(RatPolynomial::linear(1, rational(1, 2))) *
                           pow2q(r);
    IntPolynomial qbar = family_poly(FamilyId::Qbar, r);
    std::string actual;
    try {
      actual = format_plain(to_integer(bridge));
    } catch (const std::logic_error &e) {
      actual = std::string("error: ") + e.what();
    }
    report.add(exact_check("tables/bridge" + padded("/r=", r), {{"r", std::to_string(r)}},
                           format_plain(qbar), actual));
  }

  report.add(exact_check("tables/sequence/genocchi", {{"count", "5"}}, "-1, 1, -3, 17, -155",
                         join(classic_sequence(ClassicSequence::Genocchi, 5))));
  report.add(exact_check("tables/sequence/reduced-tangent", {{"count", "5"}}, "1, 1, 4, 34, 496",
                         join(classic_sequence(ClassicSequence::ReducedTangent, 5))));
  const long count = std::max(r_max, 10L) + 1;
  report.add(exact_check("tables/sequence/pbar-at-zero-egf", {{"count", std::to_string(count)}},
                         join(pbar_at_zero_from_egf(count)),
                         join(classic_sequence(ClassicSequence::PbarAtZero, count))));
  return report;
}

Report suite_df(long points, std::uint64_t seed) {
  Report report;
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (long r = 1; r <= 7; ++r) {
    const TriPolynomial &f = df_poly(r);
    for (std::size_t p = 0; p < perms.size(); ++p) {
      bool same = f.permuted(perms[p]) == f;
      report.add(exact_check(padded("df/symmetry/r=", r) + "/perm" + std::to_string(p),
                             {{"r", std::to_string(r)}, {"perm", std::to_string(p)}}, "symmetric",
                             same ? "symmetric" : "not symmetric"));
    }
    bool nonneg = std::all_of(f.terms().begin(), f.terms().end(),
                              [](const auto &t) { return t.second > 0; });
    report.add(exact_check(padded("df/nonnegative/r=", r), {{"r", std::to_string(r)}},
                           "nonnegative", nonneg ? "nonnegative" : "has negative coefficient"));
  }

  // Raw engine output keeps the sample points identical on every platform.
  std::mt19937_64 engine(seed);
  const BigRational zs[] = {rational(1, 2), 1, rational(3, 2), 2};
  auto draw = [&] {
    long num = static_cast<long>(engine() % 19) - 9;
    long den = static_cast<long>(engine() % 6) + 1;
    return rational(num, den);
  };
  for (long i = 0; i < points; ++i) {
    BigRational x = draw(), y = draw();
    BigRational z = zs[engine() % 4];
    for (long r = 1; r <= 7; ++r) {
      std::string actual;
      try {
        actual = to_string(df_carlitz(r, x, y, z));
      } catch (const std::exception &e) {
        actual = std::string("error: ") + e.what();
      }
      report.add(exact_check(padded("df/carlitz/point", i) + padded("/r=", r),
                             {{"r", std::to_string(r)},
                              {"x", to_string(x)},
                              {"y", to_string(y)},
                              {"z", to_string(z)}},
                             to_string(df_eval(r, x, y, z)), actual));
    }
  }

  const auto secant = secant_numbers(9);
  const BigRational half = rational(1, 2);
  for (long r = 0; r <= 8; ++r) {
    BigRational want = pow2q(-2 * r) * BigRational((2 * r + 1) * secant[static_cast<std::size_t>(r)]);
    report.add(exact_check(padded("df/half-point/r=", r), {{"r", std::to_string(r)}},
                           to_string(want), to_string(df_eval(r + 1, half, half, half))));
  }

  for (FamilyId fam : kAllFamilies) {
    for (long r = 1; r <= 8; ++r) {
      std::string actual;
      try {
        actual = format_plain(family_from_df(fam, r));
      } catch (const std::exception &e) {
        actual = std::string("error: ") + e.what();
      }
      report.add(exact_check("df/family/" + std::string(family_name(fam)) + padded("/r=", r),
                             {{"family", std::string(family_name(fam))}, {"r", std::to_string(r)}},
                             format_plain(family_poly(fam, r)), actual));
    }
  }
  return report;
}

Report suite_asymptotics(long r_max) {
  Report report;
  std::vector<long> ns;
  for (long i = 0; i <= 5; ++i)
    ns.push_back(50L << i);
  RecurrenceTable table = RecurrenceTable::from_environment(SumKind::U);
  char buf[96];
  for (long r = 0; r <= r_max; ++r) {
    auto scan = asymptotic_error_scan(r, ns, table);
    for (std::size_t i = 0; i < scan.size(); ++i) {
      const auto &rep = scan[i];
      std::map<std::string, std::string> in{{"r", std::to_string(r)}, {"n", std::to_string(rep.n)}};
      Check c;
      c.id = padded("asymptotics/r=", r) + padded("/n=", rep.n);
      c.inputs = in;
      std::snprintf(buf, sizeof buf, "%.6e", rep.rel_error);
      c.actual = buf;
      if (approximation_is_exact(r)) {
        c.expected = "< 1e-12";
        c.ok = rep.rel_error < 1e-12;
      } else if (i == 0) {
        c.expected = "> 0";
        c.ok = rep.rel_error > 0;
      } else {
        double ratio = rep.rel_error / scan[i - 1].rel_error;
        std::snprintf(buf, sizeof buf, "ratio in [%.2f, %.2f]", kDoublingRatioLow,
                      kDoublingRatioHigh);
        c.expected = buf;
        std::snprintf(buf, sizeof buf, "%.6e (ratio %.5f)", rep.rel_error, ratio);
        c.actual = buf;
        c.ok = rep.rel_error < scan[i - 1].rel_error && ratio >= kDoublingRatioLow &&
               ratio <= kDoublingRatioHigh;
      }
      report.add(std::move(c));
    }
  }
  return report;
}

} // namespace centred
