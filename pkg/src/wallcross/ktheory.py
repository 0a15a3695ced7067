"""K_0 lattices, Euler pairings, and wall-crossing at the level of classes.

Everything here is finite linear algebra over the integers: an Ext-dimension
table between the simple objects determines the Euler form, a single tilt
followed by a shifted tilt sends the simple basis to a new one, and the dual
(projective) basis comes from inverting that change of basis.  Module-level
tilting lives in the quiver module; this one never looks at an actual object.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from . import linalg
from .fixtures import load_fixture


class KClass:
    """Integer coordinate vector over an ordered basis of labels."""

    def __init__(self, labels, coords):
        if len(labels) != len(coords):
            raise ValueError("coordinate length mismatch")
        self.labels = list(labels)
        self.coords = list(coords)

    def __eq__(self, other):
        return (isinstance(other, KClass) and self.labels == other.labels
                and self.coords == other.coords)

    def __repr__(self):
        return f"KClass({self.as_dict()!r})"

    def as_dict(self):
        return {lab: c for lab, c in zip(self.labels, self.coords) if c}


class ExtTable:
    """dim Ext^k(L_a, L_b) for every ordered pair of simple labels.

    Stored as a dict keyed "a,b" -> list of dims for k = 0..max_degree.
    """

    def __init__(self, labels, max_degree, table):
        self.labels = list(labels)
        self.max_degree = max_degree
        self.table = {}
        for a in self.labels:
            for b in self.labels:
                key = f"{a},{b}"
                if key not in table:
                    raise ValueError(f"missing Ext entry {key}")
                dims = list(table[key])
                if len(dims) != max_degree + 1:
                    raise ValueError(f"bad Ext list length for {key}")
                self.table[key] = dims
        for a in self.labels:
            if self.table[f"{a},{a}"][0] != 1:
                raise ValueError(f"Ext^0({a},{a}) must be 1")
            for b in self.labels:
                if b != a and self.table[f"{a},{b}"][0] != 0:
                    raise ValueError(f"Ext^0({a},{b}) must be 0")

    @classmethod
    def from_fixture(cls, name="ext_b2.json"):
        data = load_fixture(name)
        return cls(data["labels"], data["max_degree"], data["table"])

    def ext(self, a, b, k):
        dims = self.table[f"{a},{b}"]
        return dims[k] if k <= self.max_degree else 0

    def euler(self, a, b):
        dims = self.table[f"{a},{b}"]
        return sum((-1) ** k * d for k, d in enumerate(dims))


def euler_form(ext):
    """Matrix of the Euler pairing <L_i, L_j> over the simple basis."""
    n = len(ext.labels)
    return [[ext.euler(ext.labels[i], ext.labels[j]) for j in range(n)]
            for i in range(n)]


def double_tilt_classes(ext, theta):
    """Classes of the simples after tilting at theta and again at theta[1].

    The class of theta itself is unchanged.  For another simple L_a the new
    class picks up a multiple of [L_theta]: plus dim Ext^1(L_a, L_theta)
    copies when that Ext^1 is nonzero (the universal-extension case), minus
    dim Ext^2(L_a, L_theta) copies otherwise.
    """
    if theta not in ext.labels:
        raise ValueError(f"unknown simple {theta}")
    if ext.ext(theta, theta, 1) != 0:
        raise ValueError("tilting object has self-extensions")
    t = ext.labels.index(theta)
    out = []
    for a in ext.labels:
        coords = [0] * len(ext.labels)
        coords[ext.labels.index(a)] = 1
        if a != theta:
            e1 = ext.ext(a, theta, 1)
            if e1 != 0:
                coords[t] += e1
            else:
                coords[t] -= ext.ext(a, theta, 2)
        out.append(KClass(ext.labels, coords))
    return out


def class_matrix(classes):
    """Change-of-basis matrix with the given classes as columns."""
    labels = classes[0].labels
    return [[Fraction(c.coords[i]) for c in classes] for i in range(len(labels))]


def dual_basis(S):
    """Projective classes dual to the new simples: the rows of S^{-1}.

    Entries must come out integral; a denominator means the input classes
    do not span the lattice and the table feeding them is wrong.
    """
    inv = linalg.inverse(S)
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ValueError("dual basis is not integral")
    return [[int(x) for x in row] for row in inv]


def gram_transform(E, S):
    """S^T E S: the Euler pairing in the new simple basis."""
    if len(E) != len(S):
        raise ValueError("size mismatch")
    Ef = [[Fraction(x) for x in row] for row in E]
    Sf = [[Fraction(x) for x in row] for row in S]
    return linalg.mat_mul(linalg.mat_mul(linalg.transpose(Sf), Ef), Sf)


def permutation_equivalent(A, B):
    """True iff some simultaneous row/column permutation carries A to B.

    Exhaustive over all n! permutations; meant for n up to about 8.
    """
    n = len(A)
    if len(B) != n:
        raise ValueError("size mismatch")
    for perm in permutations(range(n)):
        if all(A[perm[i]][perm[j]] == B[i][j] for i in range(n) for j in range(n)):
            return True
    return False


# --- B2 wall dispatch (fixture-driven) -------------------------------------

def b2_wall_theta(wall):
    """Simple label tilted at for a named B2 wall ("z0".."z3")."""
    data = load_fixture("walls_b2.json")
    for w in data["walls"]:
        if w["name"] == wall:
            return w["theta"]
    raise ValueError(f"unknown wall {wall}")


def cross_wall_b2(wall):
    """Simples, projectives and Gram matrix after crossing one B2 wall."""
    ext = ExtTable.from_fixture("ext_b2.json")
    theta = b2_wall_theta(wall)
    simples = double_tilt_classes(ext, theta)
    S = class_matrix(simples)
    projectives = [KClass(["V" + lab[1:] for lab in ext.labels], row)
                   for row in dual_basis(S)]
    gram = [[int(x) for x in row] for row in gram_transform(euler_form(ext), S)]
    return {"simples": simples, "projectives": projectives, "gram": gram}


def general_crossed_classes(l, reading=None):
    """Classes of the new simples after the Z_0 wall, general l, from fixture.

    Returns {new-simple label: {old-simple label: coeff}} using the irrep
    label set from the cohomology module.  The source list has an internal
    index inconsistency; reading picks "consistent" (default) or "literal".
    """
    from .cohomology import irrep_labels

    data = load_fixture("cross_wall_z0_general.json")
    if reading is None:
        reading = data["default_reading"]
    if reading not in data["readings"]:
        raise ValueError(f"unknown reading {reading}")
    spec = data["readings"][reading]
    excludes = {e.replace("l-1", str(l - 1)).replace("l-2", str(l - 2))
                for e in spec["plain_excludes"]}
    special = {k.replace("l-1", str(l - 1)): {kk.replace("l-1", str(l - 1)): v
                                              for kk, v in cls.items()}
               for k, cls in spec["special"].items()}
    out = {}
    for lab in irrep_labels(l):
        if lab in special:
            out[lab] = dict(special[lab])
        elif lab == "0":
            out[lab] = {"0": 1}
        elif lab == "s":
            out[lab] = {"s": 1, "0": -3}
        elif lab.startswith("0,"):
            # plain case, subject to the exclusion clause under this reading
            i = lab.split(",")[1]
            if i in excludes and lab not in special:
                raise ValueError(
                    f"reading {reading!r} leaves {lab} without a class")
            out[lab] = {lab: 1}
        else:
            out[lab] = {lab: 1}
    return out
