"""Wall arrangement from central charges, alcoves, and the RVSC checks.

Walls are the linear factors of the charge polynomials; vanishing order on a
wall is factor multiplicity over Q (linear forms are irreducible and the
coefficient field is infinite, so this is the honest order of vanishing).
Positivity on an alcove is certified by exact evaluation on a dense rational
grid of interior points rather than a decision procedure -- the charges at
hand are explicit quadratics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy

from .exactcore import INFINITE, MPoly, factor_multiplicity
from .fixtures import load_fixture


class Hyperplane:
    """An affine hyperplane, stored as a normalized degree-1 polynomial.

    Normalization: integer coefficients with gcd 1 and a positive leading
    coefficient in the variable order, so equal walls compare equal.
    """

    def __init__(self, form: MPoly):
        if form.total_degree() != 1:
            raise ValueError("hyperplane form must have degree exactly 1")
        coeffs = [c for _, c in sorted(form.terms.items())]
        denom = 1
        for c in coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        scaled = form * Fraction(denom)
        numer = 0
        for c in scaled.terms.values():
            numer = gcd(numer, abs(c.numerator))
        scaled = scaled * Fraction(1, numer)
        lead = scaled.terms[max(scaled.terms, key=lambda e: e)]
        if lead < 0:
            scaled = -scaled
        self.form = scaled

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def __repr__(self):
        return f"Hyperplane({self.form!r})"

    @staticmethod
    def from_fixture_form(form: dict, vars) -> "Hyperplane":
        terms = {}
        for k, v in form.items():
            exps = tuple(1 if u == k else 0 for u in vars)
            if k == "const":
                exps = (0,) * len(vars)
            terms[exps] = Fraction(v)
        return Hyperplane(MPoly(tuple(vars), terms))


def _to_sympy(f: MPoly, syms):
    expr = sympy.Integer(0)
    for exps, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exps):
            if e:
                term *= s ** e
        expr += term
    return expr


def _from_sympy(expr, vars, syms):
    poly = sympy.Poly(expr, *syms)
    terms = {}
    for exps, c in poly.terms():
        terms[tuple(exps)] = Fraction(int(sympy.numer(c)), int(sympy.denom(c)))
    return MPoly(tuple(vars), terms)


def linear_factors(f: MPoly):
    """(list of (Hyperplane, multiplicity), list of nonlinear factor MPolys).

    Factors over Q; constants are dropped.
    """
    if f.is_zero() or f.total_degree() == 0:
        return [], []
    syms = sympy.symbols(f.vars)
    if not isinstance(syms, tuple):
        syms = (syms,)
    _, factors = sympy.factor_list(_to_sympy(f, syms))
    linear, nonlinear = [], []
    for expr, mult in factors:
        g = _from_sympy(expr, f.vars, syms)
        if g.total_degree() == 1:
            linear.append((Hyperplane(g), mult))
        else:
            nonlinear.append(g)
    return linear, nonlinear


def walls_from_charges(Z: dict):
    """Deduplicated walls (linear factors of all the Z's) plus a report of
    nonlinear irreducible factors, which are not walls."""
    walls = []
    nonlinear = []
    for lab in Z:
        lin, nonlin = linear_factors(Z[lab])
        for h, _ in lin:
            if h not in walls:
                walls.append(h)
        for g in nonlin:
            if g not in nonlinear:
                nonlinear.append(g)
    return walls, nonlinear


def vanishing_order_on_wall(Z: MPoly, H: Hyperplane):
    """Order of vanishing of Z along H (factor multiplicity; INFINITE if Z=0)."""
    if Z.is_zero():
        return INFINITE
    f, h = Z.align(H.form)
    return factor_multiplicity(f, h)


class Alcove:
    """Open region cut out by strict linear inequalities, with a sample point
    and a bounding box for grid generation."""

    def __init__(self, vars, sample, box, constraints):
        self.vars = tuple(vars)
        self.sample = {k: Fraction(v) for k, v in sample.items()}
        self.box = {k: (Fraction(lo), Fraction(hi)) for k, (lo, hi) in box.items()}
        self.constraints = list(constraints)  # (Hyperplane, sign) pairs
        if not self.contains(self.sample):
            raise ValueError("sample point violates the alcove constraints")

    @staticmethod
    def from_fixture(name="walls_b2.json") -> "Alcove":
        data = load_fixture(name)
        vars = data["vars"]
        alc = data["alcove"]
        cons = [(Hyperplane.from_fixture_form(c["form"], vars), c["sign"])
                for c in alc["constraints"]]
        return Alcove(vars, alc["sample"],
                      {k: tuple(v) for k, v in alc["box"].items()}, cons)

    def contains(self, point) -> bool:
        for h, sign in self.constraints:
            v = h.form.evaluate(point)
            if sign > 0 and not v > 0:
                return False
            if sign < 0 and not v < 0:
                return False
        return True

    def grid_points(self, grid: int):
        """Interior rational lattice points of the bounding box, filtered by
        the strict constraints; the sample point is always included."""
        if grid < 1:
            return [dict(self.sample)]
        axes = []
        for v in self.vars:
            lo, hi = self.box[v]
            step = (hi - lo) / (grid + 1)
            axes.append([lo + step * k for k in range(1, grid + 1)])
        points = [dict(self.sample)]
        idx = [0] * len(axes)
        while True:
            pt = {v: axes[i][idx[i]] for i, v in enumerate(self.vars)}
            if pt != self.sample and self.contains(pt):
                points.append(pt)
            k = len(axes) - 1
            while k >= 0:
                idx[k] += 1
                if idx[k] < len(axes[k]):
                    break
                idx[k] = 0
                k -= 1
            if k < 0:
                return points


def positivity_on_alcove(Z: dict, A: Alcove, grid: int = 20):
    """Evaluate every charge at every interior grid point, exactly.

    Returns {"points": count, "failures": [(label, point, value), ...]}.
    """
    points = A.grid_points(grid)
    failures = []
    for lab, poly in Z.items():
        for pt in points:
            v = poly.evaluate(pt)
            if not v > 0:
                failures.append((lab, dict(pt), v))
    return {"points": len(points), "failures": failures}


def rvsc_check_pair(Z_A: dict, Z_Ap: dict, H: Hyperplane, S=None):
    """Order bookkeeping for one wall between two adjacent charge tables.

    Reports the vanishing order of every charge of the near side on H,
    verifies that some positive order exists, and, when the wall-crossing
    matrix S (new simple classes as columns over the same label order) is
    supplied, that recombining the near-side charges through S reproduces
    the far side exactly.
    """
    orders = {lab: vanishing_order_on_wall(Z_A[lab], H) for lab in Z_A}
    finite = {lab: o for lab, o in orders.items() if o is not INFINITE}
    positive = [lab for lab, o in finite.items() if o > 0]
    report = {
        "orders": orders,
        "vanishing_labels": positive,
        "has_vanishing": bool(positive),
        "order_two_labels": [lab for lab, o in finite.items() if o == 2],
        "order_one_labels": [lab for lab, o in finite.items() if o == 1],
    }
    report["pass"] = report["has_vanishing"]
    if S is not None:
        labels = list(Z_A)
        ok = True
        for j, lab in enumerate(labels):
            z = MPoly.constant(0, Z_A[labels[0]].vars)
            for i, src in enumerate(labels):
                c = S[i][j]
                if c:
                    z = z + Fraction(c) * Z_A[src]
            if z != Z_Ap[lab]:
                ok = False
        report["crossing_consistent"] = ok
        report["pass"] = report["pass"] and ok
    return report


def b2_walls():
    """The four named B2 walls from the fixture, as (name, theta, Hyperplane)."""
    data = load_fixture("walls_b2.json")
    return [(w["name"], w["theta"],
             Hyperplane.from_fixture_form(w["form"], data["vars"]))
            for w in data["walls"]]
