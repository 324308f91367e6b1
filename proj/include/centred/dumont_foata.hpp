#pragma once

// Dumont-Foata polynomials F_r(x,y,z):
//
//   F_1 = 1,  F_{r+1}(x,y,z) = (x+z)(y+z) F_r(x,y,z+1) - z^2 F_r(x,y,z)
//
// their Carlitz double-sum form, and the substitutions linking them to the
// P, Pbar, Q, Qbar families and to U_r(n).

#include "centred/families.hpp"
#include "centred/numeric.hpp"
#include "centred/polynomial.hpp"

#include <array>
#include <map>
#include <string>

namespace centred {

/// Sparse polynomial in x, y, z with integer coefficients. No stored zeros.
class TriPolynomial {
public:
  using Exponents = std::array<int, 3>;

  TriPolynomial() = default;
  static TriPolynomial constant(const BigInt &c);
  /// The monomial x (var 0), y (var 1) or z (var 2).
  static TriPolynomial variable(int var);

  const std::map<Exponents, BigInt> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponents &e) const;
  /// Largest exponent of the given variable.
  int degree_in(int var) const;

  TriPolynomial &operator+=(const TriPolynomial &o);
  TriPolynomial &operator-=(const TriPolynomial &o);
  friend TriPolynomial operator+(TriPolynomial a, const TriPolynomial &b) { return a += b; }
  friend TriPolynomial operator-(TriPolynomial a, const TriPolynomial &b) { return a -= b; }
  friend TriPolynomial operator*(const TriPolynomial &a, const TriPolynomial &b);
  friend bool operator==(const TriPolynomial &, const TriPolynomial &) = default;

  /// The polynomial with z replaced by z + 1.
  TriPolynomial shift_z() const;
  /// Variables renamed so that variable i becomes variable perm[i].
  TriPolynomial permuted(const std::array<int, 3> &perm) const;

  BigRational operator()(const BigRational &x, const BigRational &y,
                         const BigRational &z) const;
  /// Substitutes a univariate polynomial in n for each variable.
  RatPolynomial substitute(const RatPolynomial &x, const RatPolynomial &y,
                           const RatPolynomial &z) const;

  /// Monomials in descending lexicographic exponent order, e.g.
  /// "x*y + x*z + y*z".
  std::string to_string() const;

private:
  void add_term(const Exponents &e, const BigInt &c);
  std::map<Exponents, BigInt> terms_;
};

/// F_r for r >= 1, memoized process-wide.
const TriPolynomial &df_poly(long r);

BigRational df_eval(long r, const BigRational &x, const BigRational &y,
                    const BigRational &z);

/// Carlitz's explicit formula
///   F_r = 2(-1)^{r-1} sum_{0<=j<=k<r} (-1)^j (x+z)_k (y+z)_k (z+j)^{2r-1}
///                                      / (j! (k-j)! (2z+j)_{k+1}).
/// Throws DomainError when (2z)_{2r-1} = 0.
BigRational df_carlitz(long r, const BigRational &x, const BigRational &y,
                       const BigRational &z);

/// P, Pbar, Q, Qbar rebuilt from F:
///   P_r(n)    = (-1)^{r-1} n F_r(-n, 1, 1)
///   Pbar_r(n) = (-4)^r F_{r+1}(1/2 - n, 1/2, 1/2)
///   Q_r(n)    = (-2)^{r-1} n F_r(-n, 1/2, 1)
///   Qbar_r(n) = (-1)^{r-1} 2^{2r-1} (n + 1/2) F_r(-n - 1/2, 1/2, 1)
/// Throws std::logic_error if the result does not clear to integers.
IntPolynomial family_from_df(FamilyId which, long r);

/// U_order(n) through F:
///   U_{2s}(n)      = 2^{n-2} n (-1)^{s-1} F_s(-n/2, 1/2, 1),           s >= 1
///   U_{2s+1}(2m)   = m^2 (-1)^{s-1} F_s(-m, 1, 1) C(2m,m),            s >= 1
///   U_{2s+1}(2m-1) = (1/2) m (-1)^s F_{s+1}(1/2 - m, 1/2, 1/2) C(2m,m), s >= 0
/// with n >= 1 throughout.
BigRational u_from_df(long order, long n);

/// Whether u_from_df accepts (order, n).
bool df_route_applies(long order, long n);

} // namespace centred
