"""Graded character identities, checked as honest power series.

Three families: the Koszul-type sums against their closed forms, the
finite alternating sums, and fake degrees of partitions (whose value at
q=1 counts standard Young tableaux).

Run:  python demos/graded_characters.py
"""

from wallcross.exactcore import expand
from wallcross.poincare import (fake_degree, kc_identity_check,
                                koszul_closed_form, koszul_trivial_sum)
from wallcross.suites import syt_count


def main():
    order = 40
    for (n, m, p) in [(1, 0, 5), (2, 1, 5), (3, 2, 7), (4, 3, 11)]:
        s = koszul_trivial_sum(n, m, p, order)
        closed = expand(koszul_closed_form(n, m, p), order)
        print(f"koszul n={n} m={m} p={p}: "
              f"{'match' if s == closed else 'MISMATCH'} to order {order}")

    print("\nkac-cheung n=0..10:",
          "ok" if all(kc_identity_check(n) for n in range(11)) else "BROKEN")

    print("\nfake degrees at q=1 vs tableau counts:")
    for tau in [(3,), (2, 1), (1, 1, 1), (3, 2), (4, 2, 1)]:
        n = sum(tau)
        f = expand(fake_degree(tau), n * (n - 1) // 2 + 1)
        at_one = sum(f.coeffs)
        print(f"  tau={tau}: f(1)={at_one}, SYT={syt_count(tau)}")


if __name__ == "__main__":
    main()
