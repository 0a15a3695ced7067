"""Run the truncated mutation flow on the cotangent-bundle quiver.

Two mutations at the quiver's marked vertex; after the second the reduced
model collapses to a point (one-dimensional, degree zero) and the K-class
bookkeeping lands on (3, -3, 1).  The dual pairing is re-verified after
every step.

Run:  python demos/mutation_flow.py [D]     (default truncation D=6)
"""

import sys

from wallcross.quiver import (MutationState, Quiver, build_algebra,
                              truncated_mutation, verify_dual_pairing)


def main():
    D = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    q = Quiver.from_fixture("quiver_t_star_p2.json")
    print(f"quiver: {sorted(q.vertices)}, {len(q.arrows)} arrows, "
          f"truncation D={D}")
    A = build_algebra(q, D)
    state = MutationState(A)
    for k in (1, 2):
        r = truncated_mutation(state)
        print(f"\nstep {k}: mutate at {r['theta']}")
        print(f"  sections: {r['section_counts']}")
        print(f"  verdict:  {'injective' if r['injective'] else 'NOT injective'}")
        print(f"  dims:     {r['dims']} (total {r['total_dim']})")
        print(f"  K-class:  {r['kclass']}")
        print(f"  pairing:  {'ok' if verify_dual_pairing(state) else 'BROKEN'}")


if __name__ == "__main__":
    main()
