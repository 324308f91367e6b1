#include "centred/recurrence.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace centred {

RecurrenceTable::RecurrenceTable(SumKind kind, std::optional<std::size_t> cap)
    : kind_(kind), cap_(cap) {}

RecurrenceTable RecurrenceTable::from_environment(SumKind kind) {
  std::optional<std::size_t> cap;
  if (const char *env = std::getenv("CENTRED_SUMS_CACHE_CAP"); env && *env) {
    try {
      cap = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception &) {
      throw DomainError(std::string("CENTRED_SUMS_CACHE_CAP is not a count: ") + env);
    }
  }
  return RecurrenceTable(kind, cap);
}

std::size_t RecurrenceTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::optional<BigRational> RecurrenceTable::lookup(long r, long n) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find({r, n});
  if (it == memo_.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::pair<long, long>> RecurrenceTable::keys() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<long, long>> out;
  out.reserve(memo_.size());
  for (const auto &[k, v] : memo_)
    out.push_back(k);
  return out;
}

void RecurrenceTable::store(long r, long n, const BigRational &v) {
  std::unique_lock lock(mutex_);
  if (cap_ && memo_.size() >= *cap_)
    return;
  // insert-if-absent: a concurrent writer may have stored the same value
  memo_.try_emplace({r, n}, v);
}

BigRational RecurrenceTable::seed(long r, long n) const {
  if (kind_ == SumKind::U) {
    if (r == 0)
      return BigRational(pow2(static_cast<unsigned long>(n)));
    long half = n / 2;
    BigInt central = binomial(2 * half, half);
    return BigRational(n % 2 == 0 ? BigInt(half * central) : BigInt(n * central));
  }
  if (r == 0)
    return BigRational(pow2(2UL * static_cast<unsigned long>(n)));
  return BigRational(BigInt(n) * binomial(2 * n, n));
}

BigRational RecurrenceTable::value(long r, long n) {
  if (r < 0 || n < 0)
    throw DomainError("recurrence evaluation needs r >= 0 and n >= 0");
  if (auto hit = lookup(r, n))
    return *hit;

  // U steps the argument by 2, S by 1; rows hold arguments first, first+step, ..., n.
  const long step = kind_ == SumKind::U ? 2 : 1;
  const long first = kind_ == SumKind::U ? n % 2 : 0;
  const std::size_t width = static_cast<std::size_t>((n - first) / step + 1);

  std::vector<BigRational> row(width);
  long order = r % 2;
  for (std::size_t i = 0; i < width; ++i) {
    long m = first + static_cast<long>(i) * step;
    if (auto hit = lookup(order, m)) {
      row[i] = *hit;
    } else {
      row[i] = seed(order, m);
      store(order, m, row[i]);
    }
  }

  while (order < r) {
    order += 2;
    std::vector<BigRational> next(width);
    for (std::size_t i = 0; i < width; ++i) {
      long m = first + static_cast<long>(i) * step;
      if (auto hit = lookup(order, m)) {
        next[i] = *hit;
        continue;
      }
      const BigRational below = i > 0 ? row[i - 1] : BigRational(0);
      BigInt mm(m);
      if (kind_ == SumKind::U) {
        next[i] = (mm * mm * row[i] - 4 * mm * (mm - 1) * below) / 4;
      } else {
        next[i] = mm * mm * row[i] - 2 * mm * (2 * mm - 1) * below;
      }
      store(order, m, next[i]);
    }
    row = std::move(next);
  }
  return row.back();
}

BigRational u_recurrence(long r, long n) {
  return RecurrenceTable::from_environment(SumKind::U).value(r, n);
}

BigRational s_recurrence(long r, long n) {
  return RecurrenceTable::from_environment(SumKind::S).value(r, n);
}

} // namespace centred
