"""Euler-characteristic functionals, dimension polynomials, central charges.

A linear functional on the cohomology ring is pinned down by its values on
the geometric basis; the defining conditions say that pairing against the
(duals of the) tautological classes is a delta.  That gives one square exact
linear system per l, solved once; evaluating the solved functional on the
Chern character of a formal line bundle produces a closed-form polynomial in
the alcove parameters.  Dimension polynomials are fixed rational-in-p
combinations of shifted functional values, and the central charge is just
the p^2 coefficient (the p -> infinity limit, done exactly).

For l = 2 the variables are (a, b) and the label set is L0..L4; the general
parametrization (variables n0..n_{l-1}) uses the two-index labels and at
l = 2 differs from the (a, b) one by n -> -n in the line-bundle lattice.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cohomology import CohBasis, ch_line_bundle, irrep_labels
from .exactcore import MPoly, Rat

B2_LABELS = ["L0", "L1", "L2", "L3", "L4"]


def alcove_vars(l):
    return ("a", "b") if l == 2 else tuple(f"n{i}" for i in range(l))


def charge_labels(l):
    return list(B2_LABELS) if l == 2 else irrep_labels(l)


def _eval_row(l, point):
    """Coefficient row expressing ell(point) in the unknown basis values."""
    return ch_line_bundle(l, point).vector()


def _b2_point(a, b):
    # lattice dictionary for l=2: (n0, n1) = (b, a)
    return (b, a)


def duality_matrix(l):
    """The square system whose alpha-th solution is the functional ell_alpha.

    Row beta states that ell applied to the class dual to the beta-th
    tautological bundle equals delta.  Line-bundle rows are single
    evaluations; the rank-2 bundles are expanded through the rational
    change of basis in K-theory.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    half = Fraction(1, 2)
    rows = []
    if l == 2:
        # dual (negative) lattice points in (a, b) coordinates
        for a, b in [(0, 0), (0, -1), (-1, 0), (-1, -1)]:
            rows.append(_eval_row(2, _b2_point(a, b)))
        combo = [(half, (0, -1)), (Fraction(3, 2), (-1, 0)),
                 (half, (-1, -1)), (-half, (-2, 0))]
        rows.append(_combine(2, [(c, _b2_point(*pt)) for c, pt in combo]))
        return rows

    def e(*idxs):
        v = [0] * l
        for i in idxs:
            v[i] += 1
        return tuple(v)

    for lab in irrep_labels(l):
        if lab == "0":
            rows.append(_eval_row(l, e()))
        elif lab == "s":
            rows.append(_eval_row(l, e(0)))
        elif "," not in lab:
            rows.append(_eval_row(l, e(int(lab))))
        else:
            x, y = lab.split(",")
            if x == "s":
                i = int(y)
                rows.append(_eval_row(l, e(0, i)))
            elif x == "0":
                i = int(y)
                rows.append(_combine(l, [
                    (Fraction(3, 2), e(i)), (half, e(0)),
                    (half, e(0, i)), (-half, e(i, i))]))
            else:
                i, j = int(x), int(y)
                rows.append(_combine(l, [
                    (Fraction(1), e(i, j)),
                    (half, e(0, i)), (-half, e(i, i)), (half, e(i)),
                    (half, e(0, j)), (-half, e(j, j)), (half, e(j))]))
    return rows


def _combine(l, terms):
    out = None
    for c, pt in terms:
        row = [c * x for x in _eval_row(l, pt)]
        out = row if out is None else [u + v for u, v in zip(out, row)]
    return out


def _symbolic_ch_row(l):
    """ch of the line bundle with symbolic exponents, one MPoly per basis label.

    Mirrors ch_line_bundle but with the alcove variables plugged in for the
    lattice coordinates (for l = 2: n0 = b, n1 = a).
    """
    vs = alcove_vars(l)
    gens = MPoly.gens(vs)
    if l == 2:
        n = [gens[1], gens[0]]
    else:
        n = gens
    basis = CohBasis(l)
    half = Fraction(1, 2)
    zero = MPoly.constant(0, vs)
    out = {lab: zero for lab in basis.labels}
    out["1"] = MPoly.constant(1, vs)
    out["d0"] = n[0]
    chain = half * n[0] * n[0]
    for j in range(1, l):
        out[f"p{j}"] = out[f"p{j}"] + chain
    for j in range(1, l - 1):
        lab = f"p{j + 1},{j}"
        out[lab] = out[lab] - chain
    for i in range(1, l):
        v = n[i]
        out[f"d{i}"] = v
        out[f"p{i}"] = out[f"p{i}"] + half * v * v + n[0] * v
        out[f"s{i}"] = 2 * n[0] * v
    for i in range(2, l):
        for j in range(1, i):
            out[f"p{i},{j}"] = out[f"p{i},{j}"] + n[i] * n[j]
    return [out[lab] for lab in basis.labels]


def solve_functionals(l):
    """{label: ell as MPoly in the alcove variables}, exact."""
    M = duality_matrix(l)
    n = len(M)
    if linalg.det([row[:] for row in M]) == 0:
        raise ValueError("duality system is singular")
    labels = charge_labels(l)
    sym = _symbolic_ch_row(l)
    out = {}
    for k, lab in enumerate(labels):
        rhs = [Fraction(1) if i == k else Fraction(0) for i in range(n)]
        u = linalg.solve([row[:] for row in M], rhs)
        ell = MPoly.constant(0, alcove_vars(l))
        for c, s in zip(u, sym):
            ell = ell + c * s
        out[lab] = ell
    return out


def _p_poly(terms):
    """MPoly in p from {power: Fraction} terms."""
    return MPoly(("p",), {(k,): c for k, c in terms.items()})


def dimension_polynomial(l, label, ells=None, general=False):
    """Graded dimension as a polynomial in the alcove variables and p.

    For l = 2 this is the exact five-term combination of shifted functional
    values; for general l only the p^2-leading multiplicities enter.  Pass
    general=True to force the wreath-parametrization combination at l = 2
    (ells must then be keyed by the two-index labels in the n-variables).
    """
    if ells is None:
        ells = solve_functionals(l)
    if label not in ells:
        raise KeyError(f"unknown label {label!r}")
    ell = ells[label]
    if l == 2 and not general:
        quarters = [
            (_p_poly({2: Fraction(1, 8), 0: Fraction(-1, 8)}), (0, 0)),
            (_p_poly({2: Fraction(1, 4), 1: Fraction(-1, 2), 0: Fraction(-3, 4)}), (0, 1)),
            (_p_poly({2: Fraction(1, 2), 1: Fraction(-1, 2)}), (1, 0)),
            (_p_poly({2: Fraction(1, 4), 1: Fraction(-1), 0: Fraction(3, 4)}), (1, 1)),
            (_p_poly({2: Fraction(-1, 8), 0: Fraction(1, 8)}), (2, 0)),
        ]
        total = MPoly.constant(0, ("a", "b", "p"))
        for coeff, (da, db) in quarters:
            total = total + coeff * ell.shift({"a": da, "b": db})
        return total
    p2 = _p_poly({2: Fraction(1, l * l)})

    def sh(*idxs):
        v = {}
        for i in idxs:
            v[f"n{i}"] = v.get(f"n{i}", 0) + 1
        return v

    half = Fraction(1, 2)
    bracket = half * ell
    bracket = bracket + Fraction(l, 2) * ell.shift(sh(0))
    for i in range(1, l):
        bracket = bracket + Fraction(l + 2, 2) * ell.shift(sh(i))
        bracket = bracket + Fraction(l, 2) * ell.shift(sh(0, i))
        bracket = bracket - Fraction(l - 1, 2) * ell.shift(sh(i, i))
    for i in range(2, l):
        for j in range(1, i):
            bracket = bracket + ell.shift(sh(i, j))
    return p2 * bracket


def central_charge(l, label, ells=None, general=False):
    """The p^2 coefficient of the dimension polynomial (the exact limit)."""
    return dimension_polynomial(l, label, ells, general=general).coefficient("p", 2)


def charge_table(l):
    """{label: Z as MPoly in the alcove variables}."""
    ells = solve_functionals(l)
    return {lab: central_charge(l, lab, ells) for lab in charge_labels(l)}


def crossed_charges(base, S):
    """Charges of the new simples: column j of S recombines the old Z's.

    base is a {label: MPoly} table; S is the change-of-basis matrix from
    ktheory with the new simple classes as columns over the same labels.
    """
    labels = list(base)
    n = len(labels)
    if len(S) != n or any(len(row) != n for row in S):
        raise ValueError("size mismatch")
    out = {}
    for j, lab in enumerate(labels):
        z = MPoly.constant(0, next(iter(base.values())).vars)
        for i, src in enumerate(labels):
            c = Rat(S[i][j])
            if c:
                z = z + c * base[src]
        out[lab] = z
    return out
