from fractions import Fraction

import pytest

from wallcross.alcoves import (Alcove, Hyperplane, b2_walls,
                               positivity_on_alcove, rvsc_check_pair,
                               vanishing_order_on_wall, walls_from_charges)
from wallcross.charge import charge_table, crossed_charges
from wallcross.exactcore import INFINITE, MPoly
from wallcross.ktheory import class_matrix, cross_wall_b2


def test_positivity_on_20x20_grid():
    Z = charge_table(2)
    A = Alcove.from_fixture()
    report = positivity_on_alcove(Z, A, grid=20)
    assert report["failures"] == []
    assert report["points"] > 0


def test_wall_orders_exactly():
    Z = charge_table(2)
    for name, theta, H in b2_walls():
        orders = {lab: vanishing_order_on_wall(Z[lab], H) for lab in Z}
        assert orders[theta] == 2
        assert orders["L4"] == 0
        assert [lab for lab, o in orders.items() if o != 0] == [theta]


def test_walls_recovered_from_charges():
    Z = charge_table(2)
    fixture_forms = {H for _, _, H in b2_walls()}
    walls, nonlinear = walls_from_charges({k: Z[k] for k in
                                           ("L0", "L1", "L2", "L3")})
    assert set(walls) == fixture_forms
    assert nonlinear == []
    # Z4 is irreducible: it contributes no wall
    walls4, nonlinear4 = walls_from_charges({"L4": Z["L4"]})
    assert walls4 == [] and len(nonlinear4) == 1


def test_rvsc_pair_across_z0():
    Z = charge_table(2)
    cw = cross_wall_b2("z0")
    S = class_matrix(cw["simples"])
    H = next(H for name, _, H in b2_walls() if name == "z0")
    Zp = crossed_charges(Z, S)
    report = rvsc_check_pair(Z, Zp, H, S=S)
    assert report["pass"]
    assert report["order_two_labels"] == ["L0"]
    assert report["crossing_consistent"]


def test_rvsc_pair_detects_wrong_matrix():
    Z = charge_table(2)
    H = next(H for name, _, H in b2_walls() if name == "z0")
    S = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
    bad = {k: v + 1 for k, v in Z.items()}
    report = rvsc_check_pair(Z, bad, H, S=S)
    assert not report["crossing_consistent"]
    assert not report["pass"]


def test_zero_charge_has_infinite_order():
    H = next(H for _, _, H in b2_walls())
    assert vanishing_order_on_wall(MPoly.constant(0, ("a", "b")), H) is INFINITE


def test_alcove_contains_sample_and_rejects_outside():
    A = Alcove.from_fixture()
    assert A.contains(A.sample)
    assert not A.contains({"a": 100, "b": 100})


def test_hyperplane_requires_affine_linear():
    a, b = MPoly.gens(("a", "b"))
    with pytest.raises(ValueError):
        Hyperplane(a * b)
    Hyperplane(2 * a + 2 * b + 1)  # fine
