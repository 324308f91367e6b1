#pragma once

// Independent reference computations used only by tests. Each one takes a
// different path from the library code it checks.

#include "centred/numeric.hpp"

#include <vector>

namespace oracle {

using centred::BigInt;
using centred::BigRational;

// Row-by-row Pascal triangle, rows 0..n_max.
inline std::vector<std::vector<BigInt>> pascal(long n_max) {
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({1});
  for (long n = 1; n <= n_max; ++n) {
    const auto &prev = rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n + 1));
    row.front() = 1;
    row.back() = 1;
    for (long k = 1; k < n; ++k)
      row[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(k)];
    rows.push_back(std::move(row));
  }
  return rows;
}

inline BigInt product_factorial(long k) {
  BigInt out = 1;
  for (long i = 2; i <= k; ++i)
    out *= i;
  return out;
}

// U_r(n) summed with rational powers of |n/2 - k| and Pascal binomials.
inline BigRational u_brute(long r, long n) {
  if (n < 0)
    return 0;
  const auto rows = pascal(n);
  BigRational total = 0;
  for (long k = 0; k <= n; ++k) {
    BigRational d = BigRational(n, 2) - k;
    d.canonicalize();
    if (d < 0)
      d = -d;
    BigRational p = 1; // 0^0 = 1
    for (long i = 0; i < r; ++i)
      p *= d;
    total += BigRational(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) * p;
  }
  return total;
}

} // namespace oracle
