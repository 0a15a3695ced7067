"""Tour of the real variation checks on the fundamental alcove.

For each of the four walls: which simple charge vanishes there, to what
order, and whether the positivity that must hold in the interior actually
holds on a sample grid.  Exact arithmetic; the grid points are Fractions.

Run:  python demos/rvsc_tour.py [grid]
"""

import sys

from wallcross.alcoves import (Alcove, b2_walls, positivity_on_alcove,
                               vanishing_order_on_wall)
from wallcross.charge import charge_table
from wallcross.exactcore import INFINITE


def main():
    grid = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    Z = charge_table(2)
    A = Alcove.from_fixture()

    rep = positivity_on_alcove(Z, A, grid=grid)
    print(f"interior positivity: {rep['points']} points, "
          f"{len(rep['failures'])} failures")

    for name, theta, H in b2_walls():
        orders = {lab: vanishing_order_on_wall(Z[lab], H) for lab in Z}
        shown = ", ".join(f"{lab}:{o if o is not INFINITE else 'inf'}"
                          for lab, o in orders.items())
        print(f"wall {name} (label {theta}): orders {shown}")


if __name__ == "__main__":
    main()
