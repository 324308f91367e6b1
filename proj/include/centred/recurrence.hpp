#pragma once

// Memoized evaluation of U_r(n) and S_r(n) through the order-two recurrences
//
//   4 U_{r+2}(n) = n^2 U_r(n) - 4n(n-1) U_r(n-2)
//     S_{r+2}(n) = n^2 S_r(n) - 2n(2n-1) S_r(n-1)
//
// seeded by U_0(n) = 2^n, U_1(2m) = m C(2m,m), U_1(2m+1) = (2m+1) C(2m,m)
// (and S_0(n) = 4^n, S_1(n) = n C(2n,n)). Even and odd orders form
// separate towers.

#include "centred/direct.hpp"
#include "centred/numeric.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace centred {

class RecurrenceTable {
public:
  /// `cap` bounds the number of memo entries; once reached, new values are
  /// computed but not stored. No cap by default.
  explicit RecurrenceTable(SumKind kind, std::optional<std::size_t> cap = std::nullopt);

  /// Reads the cap from the CENTRED_SUMS_CACHE_CAP environment variable.
  static RecurrenceTable from_environment(SumKind kind);

  SumKind kind() const { return kind_; }

  /// U_r(n) or S_r(n), per kind(). Requires r, n >= 0.
  BigRational value(long r, long n);

  std::size_t size() const;
  std::optional<BigRational> lookup(long r, long n) const;
  /// Snapshot of the memoized keys, ordered by (r, n).
  std::vector<std::pair<long, long>> keys() const;

private:
  BigRational seed(long r, long n) const;
  void store(long r, long n, const BigRational &v);

  SumKind kind_;
  std::optional<std::size_t> cap_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<long, long>, BigRational> memo_;
};

BigRational u_recurrence(long r, long n);
BigRational s_recurrence(long r, long n);

} // namespace centred
