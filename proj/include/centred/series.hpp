#pragma once

// Truncated formal power series over the rationals, and checks of the
// exponential generating functions for the centred sums.

#include "centred/numeric.hpp"
#include "centred/report.hpp"

#include <vector>

namespace centred {

/// Coefficients of z^0..z^order; every stored coefficient is exact.
class PowerSeries {
public:
  explicit PowerSeries(long order);
  PowerSeries(long order, std::vector<BigRational> coeffs);
  static PowerSeries one(long order);
  /// The series z (zero when order is 0).
  static PowerSeries variable(long order);

  long order() const { return order_; }
  const BigRational &operator[](long i) const;
  BigRational &operator[](long i);
  const std::vector<BigRational> &coefficients() const { return c_; }
  /// i! times the coefficient of z^i.
  BigRational egf_coefficient(long i) const;

  PowerSeries &operator+=(const PowerSeries &o);
  PowerSeries &operator-=(const PowerSeries &o);
  PowerSeries &operator*=(const BigRational &s);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries &b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries &b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const BigRational &s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
  friend bool operator==(const PowerSeries &a, const PowerSeries &b) = default;

  /// Binary exponentiation, truncating at every step.
  PowerSeries pow(unsigned long e) const;
  /// 1/f; requires a nonzero constant term.
  PowerSeries reciprocal() const;

private:
  void check_order(const PowerSeries &o) const;
  long order_;
  std::vector<BigRational> c_;
};

enum class Elementary { Exp, Cosh, Sinh, Sec };

/// Maclaurin series of f(scale * z) to the given order.
PowerSeries series_elementary(Elementary kind, const BigRational &scale, long order);

/// sum_r U_{2r}(n) z^{2r}/(2r)! = 2^n cosh^n(z/2).
Report verify_egf_even(long n, long order);
/// sum_r S_{2r}(n) z^{2r}/(2r)! = 2^{2n} cosh^{2n}(z/2).
Report verify_egf_s_even(long n, long order);
/// cosh^n(z) = sum_k (-1)^k (1/2)_k (-n/2)_k (2 sinh z)^{2k}/(2k)!.
Report verify_sinh_cosh_identity(long n, long order);
/// sum_r U_{2r+1}(2n) z^{2r}/(2r)! =
///   n C(2n,n) sum_{k=0}^n 4^k C(n,k)/C(2k,k) sinh^{2k}(z/2).
Report verify_egf_odd_even(long n, long order);
/// sum_r U_{2r+1}(2n-1) z^{2r+1}/(2r+1)! = n C(2n,n) *
///   sum_{0<=j<=k<n} (-1)^{k-j} C(n-1,k) C(2k,k-j)/C(2k,k) sinh((j+1/2)z)/(j+k+1).
Report verify_egf_odd_odd(long n, long order);
/// Carlitz: sum_{r>=1} (-1)^r F_r(x,y,1) z^{2r}/(2r)! =
///   (1/(xy)) sum_{k>=1} (-1)^k (x)_k (y)_k (2 sinh(z/2))^{2k}/(2k)!.
Report verify_carlitz_egf(const BigRational &x, const BigRational &y, long order);

} // namespace centred
