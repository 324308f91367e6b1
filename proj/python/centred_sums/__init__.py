"""Exact centred binomial sums U_r(n) = sum_k C(n,k)|n/2-k|^r and S_r(n) = U_r(2n).

Values come back as fractions.Fraction (or int for integer sequences).
"""

from fractions import Fraction

from . import _core
from ._core import DomainError, formula_names, u_asymptotic_log, asymptotic_rel_errors

__version__ = _core.__version__

__all__ = [
    "DomainError",
    "u",
    "s",
    "u_closed",
    "formula_names",
    "family_poly",
    "df_poly",
    "df_eval",
    "df_carlitz",
    "secant_numbers",
    "classic_sequence",
    "walk_moment",
    "u_asymptotic_log",
    "asymptotic_rel_errors",
    "cross_validate",
    "verify_suite",
]


def u(r, n, method="direct"):
    """U_r(n) by method: direct, halfrange, recurrence, family or df."""
    return Fraction(_core.u(r, n, method))


def s(r, n):
    return Fraction(_core.s(r, n))


def u_closed(formula, r, n):
    """Evaluate one of the named closed formulas at its own (r, n)."""
    return Fraction(_core.u_closed(formula, r, n))


def family_poly(family, r):
    """Coefficients of P, Pbar, Q or Qbar in ascending degree."""
    return [int(c) for c in _core.family_poly(family, r)]


def df_poly(r):
    """F_r as {(i, j, k): coefficient} for x^i y^j z^k."""
    return {tuple(e): int(c) for e, c in _core.df_poly(r)}


def df_eval(r, x, y, z):
    return Fraction(_core.df_eval(r, *(str(Fraction(v)) for v in (x, y, z))))


def df_carlitz(r, x, y, z):
    return Fraction(_core.df_carlitz(r, *(str(Fraction(v)) for v in (x, y, z))))


def secant_numbers(count):
    return [int(v) for v in _core.secant_numbers(count)]


def classic_sequence(name, count):
    """name is genocchi, reduced-tangent or pbar-at-zero."""
    return [int(v) for v in _core.classic_sequence(name, count)]


def walk_moment(r, n, samples, seed):
    """Monte Carlo (mean, standard error) of E|n/2 - K|^r."""
    return _core.walk_moment_mc(r, n, samples, seed)


def cross_validate(r_max, n_max, jobs=1):
    return _core.cross_validate(r_max, n_max, jobs)


def verify_suite(name):
    return _core.verify_suite(name)
