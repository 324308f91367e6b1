#include "centred/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace centred {

namespace {

// ln of the approximation with the n ln 2 term removed.
double scaled_approx_log(long r, long n) {
  const double rd = static_cast<double>(r);
  return -0.5 * std::log(std::numbers::pi) + 0.5 * rd * std::log(static_cast<double>(n) / 2.0) +
         std::lgamma((rd + 1.0) / 2.0);
}

// ln(q / 2^shift) without forming either side as a double: the binary
// exponents cancel as integers before any rounding happens.
double scaled_log(const BigRational &q, long shift) {
  long num_exp = 0, den_exp = 0;
  double num = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  double den = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  return std::log(num / den) + static_cast<double>(num_exp - den_exp - shift) * std::numbers::ln2;
}

} // namespace

double u_asymptotic_log(long r, long n) {
  if (n < 1 || r < 0)
    throw DomainError("u_asymptotic_log needs r >= 0 and n >= 1");
  return static_cast<double>(n) * std::numbers::ln2 + scaled_approx_log(r, n);
}

std::vector<AsymptoticReport> asymptotic_error_scan(long r, std::span<const long> n_list,
                                                    RecurrenceTable &table) {
  if (n_list.empty())
    throw DomainError("asymptotic_error_scan: n_list is empty");
  if (table.kind() != SumKind::U)
    throw DomainError("asymptotic_error_scan: needs a U table");
  std::vector<AsymptoticReport> out;
  long prev = 0;
  for (long n : n_list) {
    if (n < 1 || n <= prev)
      throw DomainError("asymptotic_error_scan: n_list must be positive and ascending");
    prev = n;
    const BigRational exact = table.value(r, n);
    AsymptoticReport rep;
    rep.r = r;
    rep.n = n;
    rep.exact_log = log_positive(exact);
    rep.approx_log = u_asymptotic_log(r, n);
    rep.rel_error = std::fabs(std::expm1(scaled_log(exact, n) - scaled_approx_log(r, n)));
    out.push_back(rep);
  }
  return out;
}

std::vector<AsymptoticReport> asymptotic_error_scan(long r, std::span<const long> n_list) {
  RecurrenceTable table = RecurrenceTable::from_environment(SumKind::U);
  return asymptotic_error_scan(r, n_list, table);
}

double odd_even_leading_rel_error(long r, long n) {
  if (r < 0 || n < 1)
    throw DomainError("odd_even_leading_rel_error needs r >= 0 and n >= 1");
  const BigRational exact = u_recurrence(2 * r + 1, 2 * n);
  const double rd = static_cast<double>(r);
  const double approx = -0.5 * std::log(std::numbers::pi) +
                        (rd + 0.5) * std::log(static_cast<double>(n)) + std::lgamma(rd + 1.0);
  return std::fabs(std::expm1(scaled_log(exact, 2 * n) - approx));
}

} // namespace centred
