#pragma once

// Exact integer and rational arithmetic shared by every evaluator.
//
// BigInt and BigRational are the GMP C++ classes. Every gmpxx arithmetic
// result on mpq_class is already in lowest terms; the only way to obtain a
// non-canonical rational is the two-argument constructor, so code in this
// project builds fractions through rational() instead.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace centred {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when an operation is called outside the range where it is defined.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// num/den in lowest terms with a positive denominator.
BigRational rational(const BigInt &num, const BigInt &den);
inline BigRational rational(long num, long den = 1) {
  return rational(BigInt(num), BigInt(den));
}

BigInt factorial(long k);

/// C(n,k) for n >= 0 and any integer k; zero outside 0 <= k <= n.
/// Negative n throws: the generalised upper index is deliberately unsupported.
BigInt binomial(long n, long k);
BigInt binomial(const BigInt &n, const BigInt &k);

/// Rising factorial x(x+1)...(x+k-1), with (x)_0 = 1.
BigRational pochhammer(const BigRational &x, long k);

BigInt pow2(unsigned long e);
/// 2^e for any integer e, as an exact rational.
BigRational pow2q(long e);

/// b^e with 0^0 = 1.
BigInt ipow(const BigInt &b, unsigned long e);
BigRational qpow(const BigRational &b, unsigned long e);

inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

bool is_integer(const BigRational &q);

/// Exponent e when q = m / 2^e with m odd or q integral (e = 0); -1 if the
/// denominator is not a power of two.
long dyadic_exponent(const BigRational &q);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigInt &v);
std::string to_string(const BigRational &q);

/// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument.
BigRational parse_rational(const std::string &text);

/// Natural logarithm of a positive rational, accurate for values far outside
/// the double range.
double log_positive(const BigRational &q);

} // namespace centred
