#include "centred/direct.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace centred {

std::string_view method_name(Method m) {
  switch (m) {
  case Method::Direct:
    return "direct";
  case Method::Recurrence:
    return "recurrence";
  case Method::PolyFamily:
    return "family";
  case Method::Carlitz:
    return "carlitz";
  case Method::Lagrange:
    return "lagrange";
  case Method::GuoZeng:
    return "gz";
  case Method::Egf:
    return "egf";
  }
  return "?";
}

// |n/2 - k|^r = |n - 2k|^r / 2^r: accumulate integers, divide once.
BigRational u_direct(long r, long n) {
  if (r < 0)
    throw DomainError("u_direct: r must be >= 0");
  if (n < 0)
    return 0;
  BigInt total = 0;
  BigInt c = 1; // C(n, k)
  for (long k = 0; k <= n; ++k) {
    long d = n - 2 * k;
    total += c * ipow(BigInt(d < 0 ? -d : d), static_cast<unsigned long>(r));
    c = c * (n - k) / (k + 1);
  }
  return rational(total, pow2(static_cast<unsigned long>(r)));
}

BigRational u_direct_halfrange(long r, long n) {
  if (r < 1)
    throw DomainError("u_direct_halfrange: defined for r >= 1 only");
  if (n < 0)
    return 0;
  BigInt total = 0;
  BigInt c = 1;
  for (long k = 0; 2 * k < n; ++k) {
    total += c * ipow(BigInt(n - 2 * k), static_cast<unsigned long>(r));
    c = c * (n - k) / (k + 1);
  }
  return rational(2 * total, pow2(static_cast<unsigned long>(r)));
}

BigRational s_direct(long r, long n) {
  if (r < 0)
    throw DomainError("s_direct: r must be >= 0");
  if (n < 0)
    return 0;
  BigInt total = 0;
  for (long k = 0; k <= 2 * n; ++k) {
    long d = n - k;
    total += binomial(2 * n, k) * ipow(BigInt(d < 0 ? -d : d), static_cast<unsigned long>(r));
  }
  return BigRational(total);
}

MonteCarloEstimate walk_moment_mc(long r, long n, long samples, std::uint64_t seed) {
  if (samples < 1)
    throw DomainError("walk_moment_mc: samples must be >= 1");
  if (r < 0 || n < 0)
    throw DomainError("walk_moment_mc: r and n must be >= 0");
  std::mt19937_64 engine(seed);
  const double scale = std::ldexp(1.0, static_cast<int>(-r));
  // Welford accumulation
  double mean = 0.0, m2 = 0.0;
  for (long s = 0; s < samples; ++s) {
    long heads = 0;
    for (long left = n; left > 0; left -= 64) {
      std::uint64_t bits = engine();
      if (left < 64)
        bits &= (std::uint64_t{1} << left) - 1;
      heads += std::popcount(bits);
    }
    double x = std::pow(std::fabs(static_cast<double>(n - 2 * heads)), static_cast<double>(r)) * scale;
    double delta = x - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (x - mean);
  }
  MonteCarloEstimate est;
  est.mean = mean;
  est.samples = samples;
  est.std_error = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples)) : 0.0;
  return est;
}

} // namespace centred
