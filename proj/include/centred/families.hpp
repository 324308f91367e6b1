#pragma once

// The four integer polynomial families behind U_r(n):
//
//   U_{2r+1}(2n)   = n P_r(n) C(2n,n)
//   U_{2r+1}(2n-1) = 2^{-(2r+1)} n Pbar_r(n) C(2n,n)
//   U_{2r}(2n)     = 2^{2n-r} Q_r(n)
//   U_{2r}(2n+1)   = 2^{2n+1-2r} Qbar_r(n)
//
// plus their tabulated special values and the classical sequences that
// appear as constant terms.

#include "centred/numeric.hpp"
#include "centred/polynomial.hpp"

#include <string_view>
#include <vector>

namespace centred {

enum class FamilyId { P, Pbar, Q, Qbar };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::P, FamilyId::Pbar, FamilyId::Q,
                                            FamilyId::Qbar};

std::string_view family_name(FamilyId f);
/// Accepts "P", "Pbar", "Q", "Qbar" (case-insensitive). Throws DomainError.
FamilyId parse_family(std::string_view name);

/// Degree-r member, built from the seed 1 by the family's recurrence:
///   P_{r+1}(n)    = n^2 P_r(n) - n(n-1) P_r(n-1)
///   Pbar_{r+1}(n) = (2n-1)^2 Pbar_r(n) - 4(n-1)^2 Pbar_r(n-1)
///   Q_{r+1}(n)    = 2n^2 Q_r(n) - n(2n-1) Q_r(n-1)
///   Qbar_{r+1}(n) = (2n+1)^2 Qbar_r(n) - 2n(2n+1) Qbar_r(n-1)
IntPolynomial family_poly(FamilyId which, long r);

/// U_r(n) rebuilt from the family matching the parities of r and n.
/// The odd-order formulas are stated for a positive half-argument; n = 0
/// with odd r falls back to the definition (value 0).
BigRational u_from_family(long r, long n);

/// 2^{n-r} Q_r(n/2), which equals U_{2r}(n) for either parity of n.
BigRational q_at_half_integer(long r, long n);

struct SpecialValues {
  BigInt at_zero;
  BigInt at_one;
  BigInt leading;
  friend bool operator==(const SpecialValues &, const SpecialValues &) = default;
};

/// Values read off the polynomial itself.
SpecialValues special_values(FamilyId which, long r);

/// The tabulated closed forms for the same three values:
///   at 0:    P: [r=0]   Q: [r=0]   Pbar: (-1)^r (2r+1) S_r   Qbar: 1
///   at 1:    P: 1   Q: max(1, 2^{r-1})   Pbar: 1   Qbar: (3^{2r}+3)/4
///   leading: P: r!   Q: (2r)!/(2^r r!)   Pbar: 4^r r!   Qbar: (2r)!/r!
/// where S_r is the r-th secant number.
SpecialValues special_values_closed_form(FamilyId which, long r);

/// Secant numbers S_0..S_{count-1}, from sec z = 1/cos z by exact series
/// reciprocal.
std::vector<BigInt> secant_numbers(long count);

enum class ClassicSequence { Genocchi, ReducedTangent, PbarAtZero };

/// Genocchi:       constant term of -P_r(n)/n, r = 1..count
/// ReducedTangent: constant term of (-1)^{r-1} Q_r(n)/n, r = 1..count
/// PbarAtZero:     Pbar_r(0), r = 0..count-1
std::vector<BigInt> classic_sequence(ClassicSequence kind, long count);

/// (2r+1)! [x^{2r+1}] x/cosh(x) for r = 0..count-1; equals Pbar_r(0).
std::vector<BigInt> pbar_at_zero_from_egf(long count);

} // namespace centred
