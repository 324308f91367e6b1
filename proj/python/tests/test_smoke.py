from fractions import Fraction

import pytest

import centred_sums as cs


def test_direct_values():
    assert cs.u(0, 5) == 32
    assert cs.u(2, 1) == Fraction(1, 2)
    assert cs.u(3, 4) == 24
    assert cs.s(1, 2) == 12


@pytest.mark.parametrize("method", ["halfrange", "recurrence", "family", "df"])
def test_methods_agree(method):
    for r in range(2, 7):
        for n in range(1, 12):
            assert cs.u(r, n, method) == cs.u(r, n)


def test_closed_formulas():
    assert cs.u_closed("EvenA2", 1, 3) == 6
    assert cs.u_closed("GZOdd", 1, 2) == 12
    assert len(cs.formula_names()) == 9
    with pytest.raises(ValueError):
        cs.u_closed("OddEven2", 1, 0)


def test_polynomials_and_sequences():
    assert cs.family_poly("Pbar", 2) == [25, -56, 32]
    assert cs.df_poly(2) == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    assert cs.df_eval(2, 1, 1, 1) == 3
    assert cs.df_carlitz(3, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)) == Fraction(25, 16)
    assert cs.secant_numbers(4) == [1, 1, 5, 61]
    assert cs.classic_sequence("genocchi", 5) == [-1, 1, -3, 17, -155]


def test_walk_and_asymptotics():
    mean, se = cs.walk_moment(2, 4, 200000, 1)
    assert abs(mean - 1.0) <= 5 * se
    errs = cs.asymptotic_rel_errors(1, [50, 100, 200])
    assert errs[0] > errs[1] > errs[2]


def test_reports():
    rep = cs.cross_validate(4, 10, 2)
    assert rep["failures"] == 0 and rep["checks"]
    assert cs.verify_suite("tables")["failures"] == 0
