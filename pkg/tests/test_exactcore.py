from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wallcross.exactcore import (INFINITE, MPoly, QSeries, RatFunc,
                                 check_multipartition, check_partition,
                                 dumps_canonical, expand, factor_multiplicity,
                                 poly_arith)

V = ("a", "b")


def lin(c0, ca, cb):
    return MPoly(V, {(0, 0): Fraction(c0), (1, 0): Fraction(ca),
                     (0, 1): Fraction(cb)})


def test_shift_example():
    a, b = MPoly.gens(V)
    f = Fraction(1, 2) * (a + b + 1) * (a + b + 2)
    assert f.shift((1, 0)) == Fraction(1, 2) * (a + b) * (a + b + 1)


def test_mul_example():
    u = lin(1, 2, 2)
    got = poly_arith("mul", u, u)
    a, b = MPoly.gens(V)
    assert got == 4 * a * a + 8 * a * b + 4 * b * b + 4 * a + 4 * b + 1


def test_add_linearity():
    a, b = MPoly.gens(V)
    z0 = Fraction(1, 8) * lin(1, 2, 2) * lin(1, 2, 2)
    assert poly_arith("add", z0, -3 * z0) == -2 * z0
    assert z0 - z0 == MPoly.constant(0, V)


def test_factor_multiplicity_examples():
    z0 = Fraction(1, 8) * lin(1, 2, 2) * lin(1, 2, 2)
    assert factor_multiplicity(z0, lin(1, 2, 2)) == 2
    a, b = MPoly.gens(V)
    z4 = Fraction(-1, 4) * (4 * a * a + 4 * b * b - 1)
    assert factor_multiplicity(z4, lin(1, 2, 2)) == 0
    assert factor_multiplicity(MPoly.constant(0, V), lin(1, 2, 2)) is INFINITE
    with pytest.raises(ValueError):
        factor_multiplicity(z0, MPoly.constant(0, V))


def test_no_zero_terms_stored():
    a, b = MPoly.gens(V)
    f = (a + b) - a - b
    assert f.terms == {}
    assert f.is_zero()


coeffs = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: MPoly(V, d))


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polys, st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_factor_multiplicity_detects_planted_power(f, k):
    h = lin(1, 2, 2)
    if f.is_zero():
        return
    if factor_multiplicity(f, h) != 0:
        return
    assert factor_multiplicity(f * h ** k, h) == k


def test_qseries_truncation_is_sticky():
    s = QSeries([1, 2, 3], 3)
    t = QSeries([1, 1, 1, 1, 1], 5)
    assert (s * t).trunc == 3
    assert (s + t).trunc == 3
    assert s != QSeries([1, 2, 3, 99], 4)  # different truncation orders
    assert s == QSeries([1, 2, 3], 3)


def test_ratfunc_expand_geometric():
    r = RatFunc([Fraction(1)], [Fraction(1), Fraction(-1)])  # 1/(1-t)
    assert expand(r, 5) == QSeries([1, 1, 1, 1, 1], 5)


def test_ratfunc_expand_cancels_t_powers():
    # t / (t - t^2) = 1/(1-t)
    r = RatFunc([Fraction(0), Fraction(1)],
                [Fraction(0), Fraction(1), Fraction(-1)])
    assert expand(r, 4) == QSeries([1, 1, 1, 1], 4)


def test_partition_checks():
    assert check_partition((3, 1)) == (3, 1)
    with pytest.raises(ValueError):
        check_partition((1, 3))
    with pytest.raises(ValueError):
        check_partition((2, 0))
    assert check_multipartition(((2,), (1, 1)), 4) == ((2,), (1, 1))
    with pytest.raises(ValueError):
        check_multipartition(((2,), (1,)), 4)


def test_dumps_canonical_is_deterministic():
    a = dumps_canonical({"b": 1, "a": [1, 2], "c": {"y": 2, "x": 1}})
    b = dumps_canonical({"c": {"x": 1, "y": 2}, "a": [1, 2], "b": 1})
    assert a == b == '{"a":[1,2],"b":1,"c":{"x":1,"y":2}}'
