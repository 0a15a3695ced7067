"""Cohomology ring of Hilb^2 of a cyclic Kleinian resolution, with Chern data.

The ring H*(Hilb^2 of the Z_l resolution) is finite dimensional with basis

    1  (degree 0)
    d0, d1..d_{l-1}                    (degree 2)
    p1..p_{l-1}, s1..s_{l-1}, p_{i,j}  (degree 4, 1 <= j < i <= l-1)

for a total of l(l+3)/2 classes; everything in degree > 4 vanishes.  A class
is stored as a Fraction-valued coordinate vector over that basis.  The
multiplication table is hard-coded below; Chern characters of the
tautological bundles, line-bundle characters, the inverse dictionary
(geometric classes out of Chern characters) and the fixed-point localization
sums all live here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .exactcore import Rat, _as_rat
from . import linalg


def pij_label(i: int, j: int) -> str:
    """Canonical label for the mixed degree-4 class: larger index first."""
    if i == j:
        raise ValueError("mixed class needs distinct indices")
    i, j = max(i, j), min(i, j)
    return f"p{i},{j}"


def irrep_labels(l: int) -> list[str]:
    """Canonical order for the nontrivial-group-data index set.

    "0", "1".."l-1", "s", "s,1".."s,l-1", "0,1".."0,l-1", then "i,j" with
    l-1 >= i > j >= 1.  Size l(l+3)/2, same as the cohomology basis.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    out = ["0"] + [str(i) for i in range(1, l)] + ["s"]
    out += [f"s,{i}" for i in range(1, l)]
    out += [f"0,{i}" for i in range(1, l)]
    out += [f"{i},{j}" for i in range(2, l) for j in range(1, i)]
    return out


class CohBasis:
    """The fixed ordered basis of H* for a given l, with degree data."""

    def __init__(self, l: int):
        if l < 2:
            raise ValueError("need l >= 2")
        self.l = l
        labels = ["1", "d0"] + [f"d{i}" for i in range(1, l)]
        labels += [f"p{i}" for i in range(1, l)]
        labels += [f"s{i}" for i in range(1, l)]
        labels += [pij_label(i, j) for i in range(2, l) for j in range(1, i)]
        self.labels = labels
        self.index = {lab: k for k, lab in enumerate(labels)}

    def __len__(self):
        return len(self.labels)

    def degree(self, label: str) -> int:
        if label == "1":
            return 0
        if label.startswith("d"):
            return 2
        return 4

    def zero(self) -> "CohClass":
        return CohClass(self, {})

    def unit(self) -> "CohClass":
        return CohClass(self, {"1": 1})

    def gen(self, label: str) -> "CohClass":
        if label not in self.index:
            raise KeyError(label)
        return CohClass(self, {label: 1})


class CohClass:
    """A cohomology class: sparse Fraction coordinates over a CohBasis."""

    def __init__(self, basis: CohBasis, coords: Mapping[str, object]):
        self.basis = basis
        clean = {}
        for lab, c in coords.items():
            if lab not in basis.index:
                raise KeyError(f"unknown basis label {lab!r}")
            c = _as_rat(c)
            if c != 0:
                clean[lab] = c
        self.coords = clean

    def __getitem__(self, label: str) -> Fraction:
        return self.coords.get(label, Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CohClass(self.basis, {"1": other})
        out = dict(self.coords)
        for lab, c in other.coords.items():
            out[lab] = out.get(lab, Fraction(0)) + c
        return CohClass(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.basis, {lab: -c for lab, c in self.coords.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CohClass(self.basis, {"1": other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohClass(self.basis, {lab: c * _as_rat(other) for lab, c in self.coords.items()})
        return ring_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.basis.l == other.basis.l and self.coords == other.coords

    def __hash__(self):
        return hash((self.basis.l, frozenset(self.coords.items())))

    def vector(self) -> list[Fraction]:
        return [self[lab] for lab in self.basis.labels]

    def __repr__(self):
        if not self.coords:
            return "0"
        parts = []
        for lab in self.basis.labels:
            c = self[lab]
            if c:
                parts.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(parts)


def _mul_degree2(basis: CohBasis, a: str, b: str) -> CohClass:
    """Product of two degree-2 basis classes from the multiplication table."""
    l = basis.l
    if a == "d0" and b == "d0":
        out = {f"p{j}": Fraction(1) for j in range(1, l)}
        for j in range(1, l - 1):
            out[pij_label(j, j + 1)] = out.get(pij_label(j, j + 1), Fraction(0)) - 1
        return CohClass(basis, out)
    if "d0" in (a, b):
        i = int((b if a == "d0" else a)[1:])
        return CohClass(basis, {f"p{i}": 1, f"s{i}": 2})
    i, j = int(a[1:]), int(b[1:])
    if i == j:
        return CohClass(basis, {f"p{i}": 1})
    return CohClass(basis, {pij_label(i, j): 1})


def ring_mul(x: CohClass, y: CohClass) -> CohClass:
    """Cup product; degree-4 classes multiply everything positive to zero."""
    basis = x.basis
    if basis.l != y.basis.l:
        raise ValueError("classes over different rings")
    out = basis.zero()
    for la, ca in x.coords.items():
        for lb, cb in y.coords.items():
            da, db = basis.degree(la), basis.degree(lb)
            c = ca * cb
            if la == "1":
                out = out + CohClass(basis, {lb: c})
            elif lb == "1":
                out = out + CohClass(basis, {la: c})
            elif da + db > 4:
                continue
            else:
                out = out + c * _mul_degree2(basis, la, lb)
    return out


# ---------------------------------------------------------------------------
# Chern characters of the tautological bundles
# ---------------------------------------------------------------------------

def _sum_p_minus_chain(basis: CohBasis, scale: Fraction) -> dict:
    """scale * (sum_j p_j - sum_{j=1}^{l-2} p_{j,j+1}) as a coords dict."""
    l = basis.l
    out = {}
    for j in range(1, l):
        out[f"p{j}"] = out.get(f"p{j}", Fraction(0)) + scale
    for j in range(1, l - 1):
        lab = pij_label(j, j + 1)
        out[lab] = out.get(lab, Fraction(0)) - scale
    return out


def ch_tautological(l: int, label: str) -> CohClass:
    """Chern character of the tautological bundle indexed by an irrep label.

    Labels follow :func:`irrep_labels`: "0" is the trivial bundle, "i" the
    rank-1 bundle over the i-th node, "s" the sign-twisted one, and the
    two-part labels the rank-2 bundles.
    """
    basis = CohBasis(l)
    half = Fraction(1, 2)
    if label not in irrep_labels(l):
        raise KeyError(f"unknown tautological label {label!r} for l={l}")
    if label == "0":
        return basis.unit()
    if label == "s":
        out = _sum_p_minus_chain(basis, half)
        out["1"] = Fraction(1)
        out["d0"] = Fraction(1)
        return CohClass(basis, out)
    if "," not in label:
        i = int(label)
        return CohClass(basis, {"1": 1, f"d{i}": 1, f"p{i}": half})
    a, b = label.split(",")
    if a == "s":
        i = int(b)
        out = _sum_p_minus_chain(basis, half)
        out["1"] = Fraction(1)
        out["d0"] = Fraction(1)
        out[f"d{i}"] = Fraction(1)
        out[f"p{i}"] = out.get(f"p{i}", Fraction(0)) + Fraction(3, 2)
        out[f"s{i}"] = Fraction(2)
        return CohClass(basis, out)
    if a == "0":
        i = int(b)
        out = _sum_p_minus_chain(basis, half)
        out["1"] = Fraction(2)
        out["d0"] = Fraction(1)
        out[f"d{i}"] = Fraction(1)
        out[f"p{i}"] = out.get(f"p{i}", Fraction(0)) + half
        out[f"s{i}"] = Fraction(1)
        return CohClass(basis, out)
    i, j = int(a), int(b)
    out = _sum_p_minus_chain(basis, half)
    out["1"] = Fraction(2)
    out["d0"] = Fraction(1)
    out[f"d{i}"] = Fraction(1)
    out[f"d{j}"] = Fraction(1)
    out[pij_label(i, j)] = out.get(pij_label(i, j), Fraction(0)) + 1
    out[f"p{i}"] = out.get(f"p{i}", Fraction(0)) + half
    out[f"p{j}"] = out.get(f"p{j}", Fraction(0)) + half
    out[f"s{i}"] = Fraction(1)
    out[f"s{j}"] = Fraction(1)
    return CohClass(basis, out)


def ch_line_bundle(l: int, n: Sequence) -> CohClass:
    """Chern character of the line bundle with divisor sum n0*D0 + sum n_i*D_i.

    n is the exponent vector (n0, n1, .., n_{l-1}); entries may be Fractions
    or MPoly symbols -- the formula is polynomial so callers can pass either
    and get coefficient dictionaries of the right kind back.  Here we keep it
    numeric; the symbolic version lives in the charge module.
    """
    basis = CohBasis(l)
    if len(n) != l:
        raise ValueError(f"need {l} exponents, got {len(n)}")
    n = [_as_rat(x) for x in n]
    n0, ni = n[0], n[1:]
    half = Fraction(1, 2)
    out = _sum_p_minus_chain(basis, half * n0 * n0)
    out["1"] = Fraction(1)
    out["d0"] = n0
    for i in range(1, l):
        v = ni[i - 1]
        out[f"d{i}"] = v
        out[f"p{i}"] = out.get(f"p{i}", Fraction(0)) + half * v * v + n0 * v
        out[f"s{i}"] = Fraction(2) * n0 * v
    for i in range(2, l):
        for j in range(1, i):
            lab = pij_label(i, j)
            out[lab] = out.get(lab, Fraction(0)) + ni[i - 1] * ni[j - 1]
    return CohClass(basis, out)


def taut_matrix(l: int) -> list[list[Fraction]]:
    """Columns are ch of the tautological bundles in the cohomology basis."""
    basis = CohBasis(l)
    cols = [ch_tautological(l, lab).vector() for lab in irrep_labels(l)]
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(basis))]


def geometric_from_ch(l: int) -> dict:
    """Each geometric basis class as a rational combination of Chern characters.

    Returns {basis label: {irrep label: coefficient}} with exact entries;
    existence of the inverse (the ch classes span) is part of the contract.
    """
    basis = CohBasis(l)
    M = taut_matrix(l)
    Minv = linalg.inverse(M)
    labels = irrep_labels(l)
    out = {}
    for i, lab in enumerate(basis.labels):
        out[lab] = {labels[j]: Minv[j][i] for j in range(len(labels)) if Minv[j][i] != 0}
    return out


# ---------------------------------------------------------------------------
# Fixed point tables and localization
# ---------------------------------------------------------------------------

class FixedPointTable:
    """Equivariant weights at the torus fixed points of one component.

    Each row holds the Euler class and the second Chern class of the bundle
    under test at one fixed point, both as rational multiples of u^2 (the
    common equivariant parameter squared), so the u's cancel in the sum.
    """

    def __init__(self, name: str, rows: Sequence[tuple]):
        self.name = name
        self.rows = [(_as_rat(e), _as_rat(c)) for e, c in rows]
        if any(e == 0 for e, _ in self.rows):
            raise ValueError("Euler class must be nonzero at every fixed point")

    @staticmethod
    def from_json_obj(obj: dict) -> "FixedPointTable":
        return FixedPointTable(obj["name"], [(Fraction(r["euler"]), Fraction(r["c2"]))
                                             for r in obj["rows"]])

    def to_json_obj(self) -> dict:
        return {"name": self.name,
                "rows": [{"euler": str(e), "c2": str(c)} for e, c in self.rows]}


def localization_sum(table: FixedPointTable) -> Fraction:
    """Sum of c2/e over the fixed points; exact, and an integer on the nose
    when the table is consistent with an honest degree count."""
    return sum((c / e for e, c in table.rows), Fraction(0))
