"""Closed-form functional and charge polynomials, built independently.

These are the factored expressions the solved tables are checked against.
Everything here is assembled by direct polynomial arithmetic from the
factored forms; nothing is read back from the solver, so agreement is a
genuine end-to-end identity.  Two special-case quadratic-correction terms
in the general-parametrization charge list carry coefficient 1/2 (the
shifts in the dimension-polynomial combination cannot change a quadratic
part, which pins the coefficient; see the build ledger).
"""

from __future__ import annotations

from fractions import Fraction

from .charge import charge_labels
from .cohomology import irrep_labels
from .exactcore import MPoly


def _lin(vars, const=0, **coeffs):
    """Affine-linear MPoly c0 + sum coeffs[v] * v."""
    f = MPoly.constant(Fraction(const), vars)
    for v, c in coeffs.items():
        f = f + Fraction(c) * MPoly.var(v, vars)
    return f


def b2_ell_closed():
    """The five solved functionals in (a, b), factored forms."""
    V = ("a", "b")
    a = MPoly.var("a", V)
    b = MPoly.var("b", V)
    h = Fraction(1, 2)
    return {
        "L0": h * _lin(V, 1, a=1, b=1) * _lin(V, 2, a=1, b=1),
        "L1": h * _lin(V, 1, a=1, b=-1) * _lin(V, 0, a=1, b=-1),
        "L2": h * _lin(V, -1, a=1, b=-1) * _lin(V, 0, a=1, b=-1),
        "L3": h * _lin(V, 1, a=1, b=1) * _lin(V, 0, a=1, b=1),
        "L4": MPoly.constant(0, V) - a - b - a * a - b * b,
    }


def b2_charge_closed():
    """The five central charges in (a, b), factored forms."""
    V = ("a", "b")
    e = Fraction(1, 8)
    q = Fraction(1, 4)
    u = _lin(V, 1, a=2, b=2)      # 2a+2b+1
    return {
        "L0": e * u * u,
        "L1": e * _lin(V, -1, a=-2, b=2) * _lin(V, -1, a=-2, b=2),
        "L2": e * _lin(V, 1, a=-2, b=2) * _lin(V, 1, a=-2, b=2),
        "L3": e * _lin(V, -1, a=2, b=2) * _lin(V, -1, a=2, b=2),
        "L4": MPoly.constant(q, V)
        - q * _lin(V, 0, a=4) * MPoly.var("a", V)
        - q * _lin(V, 0, b=4) * MPoly.var("b", V),
    }


def b2_crossed_z0_closed():
    """Charges of the new simples across the Z_0 wall, factored forms.

    The fourth entry is 1/8((2a+2b-1)^2 - 3(2a+2b+1)^2): both terms are
    squares (a printed version drops one exponent, but the entry equals
    Z_3 - 3 Z_0 and both charges are squares over 8).
    """
    V = ("a", "b")
    a = MPoly.var("a", V)
    b = MPoly.var("b", V)
    e = Fraction(1, 8)
    um = _lin(V, -1, a=2, b=2)
    up = _lin(V, 1, a=2, b=2)
    Z = b2_charge_closed()
    return {
        "L0": Z["L0"],
        "L1": MPoly.constant(0, V) - _lin(V, 1, a=2) * b,
        "L2": MPoly.constant(0, V) - a * _lin(V, 1, b=2),
        "L3": e * (um * um - 3 * up * up),
        "L4": Fraction(1, 2) * _lin(V, 1, a=2) * _lin(V, 1, b=2),
    }


def general_ell_closed(l):
    """The solved functionals in (n0..n_{l-1}) for every label, factored."""
    V = tuple(f"n{i}" for i in range(l))
    n = [MPoly.var(f"n{i}", V) for i in range(l)]
    tot = n[0]
    for i in range(1, l):
        tot = tot + n[i]
    rest = tot - n[0]
    h = Fraction(1, 2)
    out = {}
    for lab in irrep_labels(l):
        if lab == "0":
            out[lab] = h * (tot - 1) * (tot - 2)
        elif lab == "s":
            d = n[0] - rest
            out[lab] = h * (d + 1) * d
        elif "," not in lab:
            i = int(lab)
            d = n[i] - n[0]
            out[lab] = h * d * (d + 1)
        elif lab.startswith("s,"):
            i = int(lab.split(",")[1])
            s = n[0] + n[i]
            out[lab] = h * s * (s - 1)
        elif lab.startswith("0,"):
            i = int(lab.split(",")[1])
            f = n[i] * (1 - rest)
            # at l = 2 the boundary cases i = 1 and i = l-1 coincide and the
            # correction term fires for both
            mult = (i == 1) + (i == l - 1)
            f = f + mult * h * n[0] * (1 - n[0])
            out[lab] = f
        else:
            i, j = (int(x) for x in lab.split(","))
            f = n[i] * n[j]
            if abs(i - j) == 1:
                f = f + h * n[0] * (1 - n[0])
            out[lab] = f
    return out


def general_charge_closed(l):
    """The central charges in (n0..n_{l-1}) for every label, factored."""
    V = tuple(f"n{i}" for i in range(l))
    n = [MPoly.var(f"n{i}", V) for i in range(l)]
    rest = MPoly.constant(0, V)
    for i in range(1, l):
        rest = rest + n[i]
    h = Fraction(1, 2)
    invl = Fraction(1, l)
    out = {}

    def sq(f):
        return h * f * f

    corr = h * (n[0] - 1) * (n[0] - 1)
    for lab in irrep_labels(l):
        if lab == "0":
            out[lab] = sq(n[0] + rest - (3 - invl))
        elif lab == "s":
            out[lab] = sq(n[0] - rest + (1 - invl))
        elif "," not in lab:
            i = int(lab)
            out[lab] = sq(n[i] - n[0] + (1 - invl))
        elif lab.startswith("s,"):
            i = int(lab.split(",")[1])
            out[lab] = sq(n[0] + n[i] - (1 + invl))
        elif lab.startswith("0,"):
            i = int(lab.split(",")[1])
            f = MPoly.constant(0, V) - (n[i] - invl) * (rest - (2 - invl))
            f = f - ((i == 1) + (i == l - 1)) * corr
            out[lab] = f
        else:
            i, j = (int(x) for x in lab.split(","))
            f = (n[i] - invl) * (n[j] - invl)
            if abs(i - j) == 1:
                f = f - corr
            out[lab] = f
    return out
