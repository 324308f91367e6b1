#pragma once

// Explicit finite-sum formulas for U_r(n), each evaluated term by term
// exactly as displayed, and the cross-method validation matrix.

#include "centred/direct.hpp"
#include "centred/numeric.hpp"
#include "centred/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace centred {

enum class FormulaId {
  EvenA2,          ///< U_{2r}(n) via F_r(-n/2, 1/2, 1) and Carlitz
  EvenB2,          ///< U_{2r}(n) via F_r(-n/2, 1, 1/2) and Carlitz
  OddEven2,        ///< U_{2r+1}(2n) via Carlitz
  OddOdd2,         ///< U_{2r-1}(2n-1) via Carlitz
  LagrangeEven,    ///< U_{2r}(n), Q_r interpolated at 0..r
  LagrangeOddEven, ///< U_{2r+1}(2n), P_r interpolated at 0..r
  LagrangeOddOdd,  ///< U_{2r-1}(2n-1), n Pbar_{r-1}(n) interpolated at 0..r
  GZEven,          ///< S_{2r}(n), Guo-Zeng
  GZOdd,           ///< S_{2r-1}(n), Guo-Zeng
};

inline constexpr FormulaId kAllFormulas[] = {
    FormulaId::EvenA2,       FormulaId::EvenB2,          FormulaId::OddEven2,
    FormulaId::OddOdd2,      FormulaId::LagrangeEven,    FormulaId::LagrangeOddEven,
    FormulaId::LagrangeOddOdd, FormulaId::GZEven,        FormulaId::GZOdd};

std::string_view formula_name(FormulaId f);
Method formula_method(FormulaId f);

/// The sum a formula evaluates for parameters (r, n).
struct FormulaTarget {
  SumKind kind;
  long order;
  long argument;
};
FormulaTarget formula_target(FormulaId f, long r, long n);

/// Human-readable validity range, e.g. "U_{2r}(n) for r >= 1, n >= 1".
std::string formula_validity(FormulaId f);
bool formula_applies(FormulaId f, long r, long n);

/// One summand, prefactor included, so that the value is the plain sum.
struct FormulaTerm {
  long j;
  long k;
  BigRational value;
};

/// Throws DomainError outside the formula's stated range.
std::vector<FormulaTerm> formula_terms(FormulaId f, long r, long n);
BigRational u_closed(FormulaId f, long r, long n);

/// GZOdd with k running to k_max instead of min(r-1, n). Terms with k > n
/// vanish, so any k_max >= min(r-1, n) gives the same value.
BigRational gz_odd_uncapped(long r, long n, long k_max);

/// Every formula that evaluates U_order(argument), with its (r, n)
/// parameters. Guo-Zeng formulas appear when the argument is even, through
/// S_order(argument/2) = U_order(argument).
struct FormulaUse {
  FormulaId formula;
  long r;
  long n;
};
std::vector<FormulaUse> formulas_for(long order, long argument);

/// Compares every applicable route against u_direct for 0 <= order <= r_max
/// and 0 <= argument <= n_max. Cells run on `jobs` threads; the report is
/// ordered by (order, argument, route) regardless.
Report cross_validate(long r_max, long n_max, unsigned jobs = 1);

} // namespace centred
