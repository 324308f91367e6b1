#pragma once

// Reference evaluation of the centred binomial sums
//
//   U_r(n) = sum_k C(n,k) |n/2 - k|^r,    S_r(n) = sum_k C(2n,k) |n - k|^r = U_r(2n)
//
// straight from their definitions. Every other route is validated against
// these.

#include "centred/numeric.hpp"

#include <cstdint>
#include <string_view>

namespace centred {

enum class Method { Direct, Recurrence, PolyFamily, Carlitz, Lagrange, GuoZeng, Egf };

std::string_view method_name(Method m);

enum class SumKind { U, S };

/// An exact U_r(n) or S_r(n) tagged with the route that produced it.
struct SumValue {
  SumKind kind = SumKind::U;
  long r = 0;
  long n = 0;
  BigRational value;
  Method method = Method::Direct;
};

/// Full-range definition with 0^0 = 1. Zero for n < 0.
BigRational u_direct(long r, long n);

/// 2 * sum_{k < n/2} C(n,k) (n/2 - k)^r, for r >= 1.
BigRational u_direct_halfrange(long r, long n);

/// S_r(n) summed over C(2n, k). Zero for n < 0.
BigRational s_direct(long r, long n);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

/// Estimates E|n/2 - K|^r for K ~ Binomial(n, 1/2), whose exact value is
/// U_r(n)/2^n.
///
/// Each sample draws n fair bits from std::mt19937_64 seeded with `seed`
/// (64 bits per engine call, low bits first) and takes K as their popcount.
/// The engine's output sequence is fixed by the C++ standard, so estimates
/// are reproducible across platforms.
MonteCarloEstimate walk_moment_mc(long r, long n, long samples, std::uint64_t seed);

} // namespace centred
