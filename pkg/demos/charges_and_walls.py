"""Walk through the rank-2 charge computation end to end.

Solves the duality constraints for the degree functionals, prints the
central charges, then crosses the first wall and shows how the charges
transform.  Everything is an exact integer-coefficient polynomial in the
alcove parameters; nothing here is numerical.

Run:  python demos/charges_and_walls.py
"""

from wallcross.charge import charge_table, crossed_charges, solve_functionals
from wallcross.ktheory import class_matrix, cross_wall_b2


def main():
    print("== degree functionals (solved, not transcribed) ==")
    for lab, f in solve_functionals(2).items():
        print(f"  ell[{lab}] = {f}")

    Z = charge_table(2)
    print("\n== central charges ==")
    for lab, z in Z.items():
        print(f"  Z[{lab}] = {z}")

    print("\n== crossing the z0 wall ==")
    cw = cross_wall_b2("z0")
    S = class_matrix(cw["simples"])
    for lab, z in crossed_charges(Z, S).items():
        print(f"  Z'[{lab}] = {z}")
    print("\nSpot checks that are easy to eyeball:")
    print("  Z'[L1] - should equal Z[L1]-Z[L0]:", crossed_charges(Z, S)["L1"])
    print("  Z[L1]-Z[L0]                      :", Z["L1"] + Z["L0"] * -1)


if __name__ == "__main__":
    main()
