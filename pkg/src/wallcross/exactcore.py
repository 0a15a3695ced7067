"""Exact rational polynomial/series kernel.

Everything downstream (cohomology classes, central charges, alcove walls,
Poincare series) is built on the three value types here:

* :class:`MPoly`      -- multivariate polynomials over Q, variables named,
                         canonical graded-lex term order for serialization.
* :class:`QSeries`    -- truncated power series in t over Q.
* :class:`RatFunc`    -- ratios of univariate polynomials in t.

All coefficients are :class:`fractions.Fraction`; there is no floating point
anywhere in the package.  Values are immutable after construction and all
operations are pure functions.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]


class Infinite:
    """Sentinel for an infinite vanishing order (zero polynomial)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"


INFINITE = Infinite()


def _as_rat(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected exact rational, got {type(x).__name__}")


class MPoly:
    """Multivariate polynomial over Q with named variables.

    Internal representation: ``vars`` is a tuple of names, ``terms`` maps
    exponent tuples to nonzero Fractions.  Binary operations align variable
    lists by (sorted) union, so polynomials built over different variable
    sets combine freely.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, Scalar]):
        vs = tuple(vars)
        clean = {}
        for exps, c in terms.items():
            c = _as_rat(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vs):
                raise ValueError("exponent tuple length != number of variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            clean[exps] = clean.get(exps, Fraction(0)) + c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, *a):  # immutability
        raise AttributeError("MPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(c: Scalar, vars: Sequence[str] = ()) -> "MPoly":
        vs = tuple(vars)
        return MPoly(vs, {(0,) * len(vs): _as_rat(c)})

    @staticmethod
    def var(name: str, vars: Sequence[str] | None = None) -> "MPoly":
        vs = tuple(vars) if vars is not None else (name,)
        if name not in vs:
            raise ValueError(f"{name!r} not among {vs}")
        exps = tuple(1 if v == name else 0 for v in vs)
        return MPoly(vs, {exps: 1})

    @staticmethod
    def gens(names: Sequence[str]) -> list["MPoly"]:
        return [MPoly.var(n, names) for n in names]

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=None)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, var: str, power: int) -> "MPoly":
        """Coefficient of var**power, as a polynomial in the remaining vars."""
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == power:
                out[exps[:i] + exps[i + 1:]] = c
        return MPoly(rest, out)

    def align(self, other: "MPoly") -> tuple["MPoly", "MPoly"]:
        if self.vars == other.vars:
            return self, other
        union = tuple(sorted(set(self.vars) | set(other.vars)))
        return self._on_vars(union), other._on_vars(union)

    def _on_vars(self, vs: tuple) -> "MPoly":
        if vs == self.vars:
            return self
        idx = {v: k for k, v in enumerate(vs)}
        out = {}
        for exps, c in self.terms.items():
            ne = [0] * len(vs)
            for v, e in zip(self.vars, exps):
                ne[idx[v]] = e
            out[tuple(ne)] = out.get(tuple(ne), Fraction(0)) + c
        return MPoly(vs, out)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.vars)
        f, g = self.align(other)
        out = dict(f.terms)
        for e, c in g.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(f.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MPoly) else MPoly.constant(-_as_rat(other), self.vars))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _as_rat(other)
            return MPoly(self.vars, {e: c * c0 for e, c in self.terms.items()})
        f, g = self.align(other)
        out = {}
        for e1, c1 in f.terms.items():
            for e2, c2 in g.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MPoly(f.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        res = MPoly.constant(1, self.vars)
        for _ in range(k):
            res = res * self
        return res

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        f, g = self.align(other)
        return f.terms == g.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def shift(self, v: Mapping[str, Scalar] | Sequence[Scalar]) -> "MPoly":
        """f(x - v): substitute x_i -> x_i - v_i (the ell(a-1,b) style shifts)."""
        if not isinstance(v, Mapping):
            if len(v) != len(self.vars):
                raise ValueError("shift vector length mismatch")
            v = dict(zip(self.vars, v))
        subs = {}
        for name in self.vars:
            x = MPoly.var(name, self.vars)
            subs[name] = x - _as_rat(v.get(name, 0))
        return self.substitute(subs)

    def substitute(self, subs: Mapping[str, "MPoly | Scalar"]) -> "MPoly":
        result = None
        for exps, c in self.terms.items():
            term = MPoly.constant(c)
            for name, e in zip(self.vars, exps):
                if e == 0:
                    continue
                val = subs.get(name, MPoly.var(name))
                if isinstance(val, (int, Fraction)):
                    val = MPoly.constant(val)
                term = term * val ** e
            result = term if result is None else result + term
        if result is None:
            return MPoly.constant(0)
        return result

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for name, e in zip(self.vars, exps):
                if e:
                    v *= _as_rat(point[name]) ** e
            total += v
        return total

    # -- division by a linear form ------------------------------------------

    def divmod_linear(self, h: "MPoly") -> tuple["MPoly", "MPoly"]:
        """Exact division with remainder by an affine-linear form.

        Uses plain leading-term reduction under graded-lex; terminates because
        the leading monomial of h is a single variable.
        """
        f, h = self.align(h)
        if h.is_zero() or h.total_degree() != 1:
            raise ValueError("divisor must be affine-linear and nonzero")
        hlead = max(h.terms, key=_gradedlex_key)
        hc = h.terms[hlead]
        q = {}
        r = {}
        work = dict(f.terms)
        while work:
            e = max(work, key=_gradedlex_key)
            c = work.pop(e)
            if c == 0:
                continue
            if all(a >= b for a, b in zip(e, hlead)):
                me = tuple(a - b for a, b in zip(e, hlead))
                mc = c / hc
                q[me] = q.get(me, Fraction(0)) + mc
                for e2, c2 in h.terms.items():
                    if e2 == hlead:
                        continue  # the popped leading term; already cancelled
                    ee = tuple(a + b for a, b in zip(me, e2))
                    work[ee] = work.get(ee, Fraction(0)) - mc * c2
                    if work[ee] == 0:
                        del work[ee]
            else:
                r[e] = r.get(e, Fraction(0)) + c
        return MPoly(f.vars, q), MPoly(f.vars, r)

    # -- serialization ------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _gradedlex_key(kv[0]), reverse=True)

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"coeff": str(c), "exps": list(e)} for e, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "MPoly":
        vs = tuple(obj["vars"])
        terms = {tuple(t["exps"]): Fraction(t["coeff"]) for t in obj["terms"]}
        return MPoly(vs, terms)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            if mono:
                cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{cs}{mono}")
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")


def _gradedlex_key(exps: tuple):
    return (sum(exps), exps)


def poly_arith(op: str, f: MPoly, g) -> MPoly:
    """Dispatcher for the four basic polynomial operations.

    ``shift`` takes a vector v and returns f(x - v).
    """
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "shift":
        return f.shift(g)
    raise ValueError(f"unknown op {op!r}")


def factor_multiplicity(f: MPoly, h: MPoly):
    """Largest k with h**k dividing f exactly; INFINITE for the zero polynomial.

    h must be a nonzero affine-linear form.  Division is exact multivariate
    division with a remainder check, so the answer is unconditional.
    """
    if not isinstance(h, MPoly) or h.is_zero():
        raise ValueError("h must be a nonzero affine-linear form")
    if h.total_degree() != 1:
        raise ValueError("h must have degree exactly 1")
    if f.is_zero():
        return INFINITE
    k = 0
    cur = f
    while True:
        q, r = cur.divmod_linear(h)
        if not r.is_zero():
            return k
        k += 1
        cur = q


# ---------------------------------------------------------------------------
# Truncated power series and rational functions in t
# ---------------------------------------------------------------------------

class QSeries:
    """Power series in t truncated at order N: coefficients of t^0..t^(N-1)."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs: Sequence[Scalar], trunc: int | None = None):
        cs = [_as_rat(c) for c in coeffs]
        n = trunc if trunc is not None else len(cs)
        if n < 0:
            raise ValueError("truncation order must be >= 0")
        cs = (cs + [Fraction(0)] * n)[:n]
        object.__setattr__(self, "trunc", n)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("QSeries is immutable")

    @staticmethod
    def one(trunc: int) -> "QSeries":
        return QSeries([1], trunc)

    @staticmethod
    def monomial(k: int, trunc: int, c: Scalar = 1) -> "QSeries":
        cs = [Fraction(0)] * trunc
        if 0 <= k < trunc:
            cs[k] = _as_rat(c)
        return QSeries(cs, trunc)

    def _common(self, other):
        n = min(self.trunc, other.trunc)
        return n

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries([other], self.trunc)
        n = self._common(other)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries([other], self.trunc)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _as_rat(other)
            return QSeries([c * c0 for c in self.coeffs], self.trunc)
        n = self._common(other)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return QSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = self._common(other)
        return self.coeffs[:n] == other.coeffs[:n] and self.trunc == other.trunc

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def to_json_obj(self) -> dict:
        return {"trunc": self.trunc, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json_obj(obj: dict) -> "QSeries":
        return QSeries([Fraction(c) for c in obj["coeffs"]], obj["trunc"])

    def __repr__(self):
        parts = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.trunc})"


def _upoly_trim(cs):
    cs = [_as_rat(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _upoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _upoly_trim(out)


def _upoly_add(a, b):
    n = max(len(a), len(b))
    return _upoly_trim([
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    ])


class RatFunc:
    """Ratio of two univariate polynomials in t (coefficient lists, low first)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[Scalar], den: Sequence[Scalar] = (1,)):
        n = _upoly_trim(list(num))
        d = _upoly_trim(list(den))
        if not d:
            raise ZeroDivisionError("zero denominator")
        object.__setattr__(self, "num", tuple(n))
        object.__setattr__(self, "den", tuple(d))

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc([1])

    @staticmethod
    def t_power(k: int) -> "RatFunc":
        return RatFunc([0] * k + [1])

    @staticmethod
    def one_minus_t_power(k: int) -> "RatFunc":
        """1 - t^k."""
        cs = [Fraction(1)] + [Fraction(0)] * (k - 1) + [Fraction(-1)] if k > 0 else [Fraction(0)]
        return RatFunc(cs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(_upoly_mul(list(self.num), [_as_rat(other)]), list(self.den))
        return RatFunc(_upoly_mul(list(self.num), list(other.num)),
                       _upoly_mul(list(self.den), list(other.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(list(self.num), _upoly_mul(list(self.den), [_as_rat(other)]))
        if not other.num:
            raise ZeroDivisionError("division by zero RatFunc")
        return RatFunc(_upoly_mul(list(self.num), list(other.den)),
                       _upoly_mul(list(self.den), list(other.num)))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc([other])
        n = _upoly_add(_upoly_mul(list(self.num), list(other.den)),
                       _upoly_mul(list(other.num), list(self.den)))
        return RatFunc(n, _upoly_mul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc([-c for c in self.num], list(self.den))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc([other])
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.num

    def evaluate(self, t: Scalar) -> Fraction:
        tv = _as_rat(t)
        nv = sum((c * tv ** i for i, c in enumerate(self.num)), Fraction(0))
        dv = sum((c * tv ** i for i, c in enumerate(self.den)), Fraction(0))
        return nv / dv

    def as_polynomial(self) -> list[Fraction]:
        """Exact quotient num/den when den divides num (raises otherwise)."""
        num = list(self.num)
        den = list(self.den)
        if not num:
            return []
        q = [Fraction(0)] * (len(num) - len(den) + 1)
        while len(num) >= len(den) and num:
            k = len(num) - len(den)
            c = num[-1] / den[-1]
            q[k] = c
            num = _upoly_trim([
                num[i] - (c * den[i - k] if 0 <= i - k < len(den) else 0)
                for i in range(len(num))
            ])
        if num:
            raise ValueError("denominator does not divide numerator")
        return q

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return _upoly_mul(list(self.num), list(other.den)) == \
            _upoly_mul(list(other.num), list(self.den))

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        def fmt(cs):
            return " + ".join(f"{c}*t^{i}" for i, c in enumerate(cs) if c) or "0"
        return f"({fmt(self.num)}) / ({fmt(self.den)})"


def expand(r: RatFunc, N: int) -> QSeries:
    """Series expansion of r to order N.

    Common powers of t are cancelled first; afterwards the denominator must
    have a nonzero constant term.
    """
    num = list(r.num)
    den = list(r.den)
    if not den or all(c == 0 for c in den):
        raise ZeroDivisionError("zero denominator")
    if not num:
        return QSeries([], N)
    vn = next(i for i, c in enumerate(num) if c != 0)
    vd = next(i for i, c in enumerate(den) if c != 0)
    k = min(vn, vd)
    num, den = num[k:], den[k:]
    if den[0] == 0:
        raise ValueError("denominator divisible by t after cancellation")
    out = [Fraction(0)] * N
    inv0 = Fraction(1) / den[0]
    for i in range(N):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out[i] = acc * inv0
    return QSeries(out, N)


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def check_partition(p: Sequence[int]) -> tuple:
    t = tuple(int(x) for x in p)
    if any(x <= 0 for x in t):
        raise ValueError("partition parts must be positive")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    return t


def check_multipartition(ps: Sequence[Sequence[int]], n: int | None = None) -> tuple:
    out = tuple(check_partition(p) if p else () for p in ps)
    if n is not None and sum(sum(p) for p in out) != n:
        raise ValueError("multipartition total size mismatch")
    return out


def dumps_canonical(obj) -> str:
    """Deterministic JSON emission used across the package."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
