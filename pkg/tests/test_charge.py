from fractions import Fraction

import pytest

from wallcross import closedforms as cf
from wallcross.charge import (central_charge, charge_table, crossed_charges,
                              dimension_polynomial, solve_functionals)
from wallcross.exactcore import MPoly
from wallcross.ktheory import class_matrix, cross_wall_b2
from wallcross.suites import l2_general_tables


def test_b2_functionals_closed_forms():
    assert solve_functionals(2) == cf.b2_ell_closed()


def test_b2_charges_closed_forms():
    assert charge_table(2) == cf.b2_charge_closed()


def test_b2_charges_via_explicit_squares():
    Z = charge_table(2)
    V = ("a", "b")
    a, b = MPoly.gens(V)
    u = 2 * a + 2 * b + 1
    assert Z["L0"] == Fraction(1, 8) * u * u
    assert Z["L4"] == Fraction(-1, 4) * (4 * a * a + 4 * b * b - 1)


def test_dimension_polynomial_has_charge_as_leading_part():
    for lab in ("L0", "L4"):
        P = dimension_polynomial(2, lab)
        assert P.coefficient("p", 2) == central_charge(2, lab)


@pytest.mark.parametrize("l", [3, 4, 5])
def test_general_functionals_and_charges(l):
    ell = solve_functionals(l)
    assert ell == cf.general_ell_closed(l)
    Z = {lab: central_charge(l, lab, ell) for lab in ell}
    assert Z == cf.general_charge_closed(l)


def test_l2_instance_of_general_lists():
    ells, Z = l2_general_tables()
    assert ells == cf.general_ell_closed(2)
    assert Z == cf.general_charge_closed(2)


def test_crossed_charges_z0_identities():
    Z = charge_table(2)
    S = class_matrix(cross_wall_b2("z0")["simples"])
    crossed = crossed_charges(Z, S)
    assert crossed == cf.b2_crossed_z0_closed()
    # spot-check the three named identities directly
    V = ("a", "b")
    a, b = MPoly.gens(V)
    assert crossed["L1"] == Z["L1"] - Z["L0"] == -(2 * a + 1) * b
    assert crossed["L4"] == Z["L4"] + 2 * Z["L0"] \
        == Fraction(1, 2) * (2 * a + 1) * (2 * b + 1)
    assert crossed["L3"] == Z["L3"] - 3 * Z["L0"]


def test_unknown_label_raises():
    with pytest.raises(KeyError):
        dimension_polynomial(2, "L9")
