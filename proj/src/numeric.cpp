#include "centred/numeric.hpp"

#include <cmath>
#include <numbers>

namespace centred {

BigRational rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw DomainError("rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt factorial(long k) {
  if (k < 0)
    throw DomainError("factorial: negative argument " + std::to_string(k));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0)
    throw DomainError("binomial: upper index must be >= 0, got " +
                      std::to_string(n));
  if (k < 0 || k > n)
    return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt binomial(const BigInt &n, const BigInt &k) {
  if (!n.fits_slong_p() || !k.fits_slong_p())
    throw DomainError("binomial: arguments out of range");
  return binomial(n.get_si(), k.get_si());
}

BigRational pochhammer(const BigRational &x, long k) {
  if (k < 0)
    throw DomainError("pochhammer: negative length");
  BigRational out = 1;
  BigRational term = x;
  for (long i = 0; i < k; ++i) {
    out *= term;
    if (out == 0)
      return out;
    term += 1;
  }
  return out;
}

BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

BigRational pow2q(long e) {
  if (e >= 0)
    return BigRational(pow2(static_cast<unsigned long>(e)));
  return rational(BigInt(1), pow2(static_cast<unsigned long>(-e)));
}

BigInt ipow(const BigInt &b, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

BigRational qpow(const BigRational &b, unsigned long e) {
  BigRational out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
  return out;
}

bool is_integer(const BigRational &q) { return q.get_den() == 1; }

long dyadic_exponent(const BigRational &q) {
  const BigInt &den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1)
    return -1;
  return static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
}

std::string to_string(const BigInt &v) { return v.get_str(); }

std::string to_string(const BigRational &q) { return q.get_str(); }

BigRational parse_rational(const std::string &text) {
  auto slash = text.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(text);
    } else {
      num = BigInt(text.substr(0, slash));
      den = BigInt(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return rational(num, den);
}

namespace {
double log_abs(const BigInt &v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}
} // namespace

double log_positive(const BigRational &q) {
  if (q <= 0)
    throw DomainError("log_positive: argument must be > 0");
  return log_abs(q.get_num()) - log_abs(q.get_den());
}

} // namespace centred
