#pragma once

// Large-n behaviour of U_r(n) with r fixed:
//
//   U_r(n) ~ pi^{-1/2} 2^n (n/2)^{r/2} Gamma((r+1)/2) (1 + O_r(1/n)).
//
// All comparisons are made in log space, so n well past the double range of
// 2^n is fine.

#include "centred/recurrence.hpp"

#include <span>
#include <vector>

namespace centred {

struct AsymptoticReport {
  long r = 0;
  long n = 0;
  double exact_log = 0.0;  ///< ln U_r(n)
  double approx_log = 0.0; ///< ln of the leading-order approximation
  double rel_error = 0.0;  ///< |U / approx - 1|
};

/// ln(pi^{-1/2} 2^n (n/2)^{r/2} Gamma((r+1)/2)), n >= 1.
double u_asymptotic_log(long r, long n);

/// Exact-vs-approximate comparison for each n (nonempty, ascending), with
/// exact values from `table` (kind U).
std::vector<AsymptoticReport> asymptotic_error_scan(long r, std::span<const long> n_list,
                                                    RecurrenceTable &table);
std::vector<AsymptoticReport> asymptotic_error_scan(long r, std::span<const long> n_list);

/// Relative error of U_{2r+1}(2n) ~ pi^{-1/2} 4^n n^{r+1/2} r!, the form
/// obtained from the leading coefficient of P_r.
double odd_even_leading_rel_error(long r, long n);

/// Consecutive-doubling error ratios accepted as first-order (1/n) decay.
/// Calibrated from exact values for r <= 6 along n = 50 * 2^i, i <= 5,
/// where every observed ratio lies in [0.5000, 0.5027].
inline constexpr double kDoublingRatioLow = 0.45;
inline constexpr double kDoublingRatioHigh = 0.55;

/// Orders whose leading-order approximation is exact: U_0(n) = 2^n and
/// U_2(n) = n 2^{n-2}.
inline bool approximation_is_exact(long r) { return r == 0 || r == 2; }

} // namespace centred
