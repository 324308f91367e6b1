#pragma once

// Verification suites run by `centred-sums verify` and the acceptance tests.

#include "centred/families.hpp"
#include "centred/numeric.hpp"
#include "centred/report.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace centred {

/// The published small cases P_0..P_5, Q_0..Q_5, Pbar_0..Pbar_5,
/// Qbar_0..Qbar_5, coefficients in ascending degree.
struct PublishedPolynomial {
  FamilyId family;
  long r;
  std::vector<long> coefficients;
};
const std::vector<PublishedPolynomial> &published_polynomials();

/// Cross-method matrix over 0 <= order <= r_max, 0 <= argument <= n_max.
Report suite_closed_forms(long r_max, long n_max, unsigned jobs = 1);

/// All six egf checks to `order`, for 0 <= n <= n_max (n >= 1 where
/// required), plus Carlitz's egf at the sample points below.
Report suite_egf(long order, long n_max);
const std::vector<std::pair<BigRational, BigRational>> &carlitz_egf_samples();

/// Published polynomials, tabulated special values for r <= r_max, the
/// bridge Qbar_r(m) = 2^r Q_r(m + 1/2), and the sequence emitters.
Report suite_tables(long r_max = 8);

/// Symmetry and nonnegativity of F_r (r <= 7), Carlitz's formula at
/// `points` seeded random rational points, F_{r+1}(1/2,1/2,1/2) (r <= 8)
/// and the family substitutions (r <= 8).
Report suite_df(long points = 50, std::uint64_t seed = 20140714);

/// Error-decay scan along n = 50 * 2^i, i <= 5, for r <= r_max.
Report suite_asymptotics(long r_max = 6);

inline constexpr std::string_view kSuiteNames[] = {"all", "closed-forms", "egf",
                                                   "tables", "df", "asymptotics"};

} // namespace centred
