"""Poincare series: fake degrees, Verma series, Koszul sums, q-identities.

Partitions are weakly decreasing tuples of positive integers.  Series live
in exactcore's QSeries/RatFunc; everything is exact in t.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .exactcore import MPoly, QSeries, RatFunc, check_partition, expand


def hook_data(tau):
    """Per-box (hook, leg) lengths; rows and columns are 0-based."""
    tau = check_partition(tau)
    conj = [sum(1 for r in tau if r > j) for j in range(tau[0] if tau else 0)]
    out = {}
    for i, row in enumerate(tau):
        for j in range(row):
            leg = conj[j] - i - 1
            hook = (row - j) + leg
            out[(i, j)] = (hook, leg)
    return out


def content_sum(tau):
    return sum(j - i for i, row in enumerate(check_partition(tau))
               for j in range(row))


def xi(tau, m):
    """Grading shift of the Verma generator: m*(C(n,2) - content sum)."""
    n = sum(check_partition(tau))
    return m * (comb(n, 2) - content_sum(tau))


def _prod_one_minus(powers):
    r = RatFunc.one()
    for k in powers:
        r = r * RatFunc.one_minus_t_power(k)
    return r


def _t_power(k):
    if k >= 0:
        return RatFunc.t_power(k)
    return RatFunc.one() / RatFunc.t_power(-k)


def fake_degree(tau):
    """K_tau(t): graded multiplicity in the coinvariant algebra (a polynomial)."""
    tau = check_partition(tau)
    n = sum(tau)
    r = _prod_one_minus(range(1, n + 1))
    for hook, leg in hook_data(tau).values():
        r = r * RatFunc.t_power(leg) / RatFunc.one_minus_t_power(hook)
    return r


def verma_series(tau, m, n=None):
    """t^xi * K_tau(t) / prod_{i=2}^n (1 - t^i)."""
    tau = check_partition(tau)
    if n is None:
        n = sum(tau)
    if sum(tau) != n:
        raise ValueError("partition size mismatch")
    return _t_power(xi(tau, m)) * fake_degree(tau) / _prod_one_minus(range(2, n + 1))


def koszul_trivial_sum(n, m, p, N):
    """Alternating Koszul sum for the trivial representation, to order N."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = QSeries([0], N)
    for s in range(1, n + 1):
        r = _t_power((s - 1) * (m * n + p) + comb(s, 2))
        r = r / _prod_one_minus(range(1, s))
        r = r / _prod_one_minus(range(1, n - s + 1))
        r = r * RatFunc.one_minus_t_power(1) / RatFunc.one_minus_t_power(n)
        term = expand(r, N)
        total = total + term if s % 2 == 1 else total - term
    return total


def koszul_closed_form(n, m, p):
    """(1-t)/(1-t^n) * prod_{i=1}^{n-1} (1-t^{mn+p+i})/(1-t^i)."""
    r = RatFunc.one_minus_t_power(1) / RatFunc.one_minus_t_power(n)
    for i in range(1, n):
        r = r * RatFunc.one_minus_t_power(m * n + p + i) / RatFunc.one_minus_t_power(i)
    return r


def _check_wreath_params(n, l, m):
    if n < 1 or l < 1:
        raise ValueError("need n, l >= 1")
    if len(m) != l + 1:
        raise ValueError(f"m must have length l+1 = {l + 1}")


def closed_form_tau_i(n, l, m, p, i):
    """Product form of the irreducible's Poincare series for the family tau(i).

    t^{ni} * prod_{k=0}^{n-1}(1 - t^{lk + m0*n + p + 1 + l*m_{i+1}})
    over prod_{k=1}^{n}(1 - t^{kl}).
    """
    _check_wreath_params(n, l, m)
    if not 0 <= i < l:
        raise ValueError("need 0 <= i < l")
    a = m[0] * n + p + 1 + l * m[i + 1]
    r = _t_power(n * i)
    for k in range(n):
        r = r * RatFunc.one_minus_t_power(l * k + a)
    return r / _prod_one_minus(l * k for k in range(1, n + 1))


def tau_i_alternating_sum(n, l, m, p, i, N):
    """The same series from its defining alternating sum, to order N."""
    _check_wreath_params(n, l, m)
    a = m[0] * n + p + 1 + l * m[i + 1]
    total = QSeries([0], N)
    base = _t_power(n * i) / _prod_one_minus(l * k for k in range(1, n + 1))
    for s in range(n + 1):
        # t-analog binomial in t^l, as the standard ratio of products
        binom = (_prod_one_minus(l * k for k in range(1, n + 1))
                 / _prod_one_minus(l * k for k in range(1, s + 1))
                 / _prod_one_minus(l * k for k in range(1, n - s + 1)))
        term = base * binom * _t_power(s * a + l * comb(s, 2))
        q = expand(term, N)
        total = total + q if s % 2 == 0 else total - q
    return total


def gaussian_binomial(n, j):
    """[n choose j]_t as an MPoly in t, by the Pascal recursion."""
    if j < 0 or j > n:
        return MPoly.constant(0, ("t",))
    row = [MPoly.constant(1, ("t",))]
    t = MPoly.var("t")
    for k in range(1, n + 1):
        new = [MPoly.constant(1, ("t",))]
        for jj in range(1, k):
            new.append(row[jj - 1] + t ** jj * row[jj])
        new.append(MPoly.constant(1, ("t",)))
        row = new
    return row[j]


def kc_identity_check(n):
    """prod_{j=0}^{n-1}(x + t^j a) == sum_j [n,j]_t t^{C(j,2)} a^j x^{n-j}."""
    if n < 0:
        raise ValueError("need n >= 0")
    vs = ("a", "t", "x")
    a, t, x = MPoly.gens(vs)
    lhs = MPoly.constant(1, vs)
    for j in range(n):
        lhs = lhs * (x + t ** j * a)
    rhs = MPoly.constant(0, vs)
    for j in range(n + 1):
        b = gaussian_binomial(n, j)._on_vars(vs)
        rhs = rhs + b * t ** comb(j, 2) * a ** j * x ** (n - j)
    return lhs == rhs
