"""Command-line front end.

Subcommands expose one module each; every one accepts --emit json|csv|pretty.
JSON output is canonical (sorted keys, no whitespace), so identical
invocations are byte-identical.  Exit status is 0 iff every executed check
passed, 1 on a failed check, 2 on bad input or missing fixtures.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .alcoves import Alcove, b2_walls, positivity_on_alcove, vanishing_order_on_wall
from .charge import charge_table, solve_functionals
from .cohomology import FixedPointTable, geometric_from_ch, localization_sum
from .exactcore import INFINITE, MPoly, QSeries, RatFunc, dumps_canonical, expand
from .fixtures import load_fixture
from .ktheory import class_matrix, cross_wall_b2, general_crossed_classes
from .poincare import (fake_degree, kc_identity_check, koszul_closed_form,
                       koszul_trivial_sum)
from .quiver import (MutationError, MutationState, Quiver, build_algebra,
                     truncated_mutation, verify_dual_pairing)
from .suites import SUITE_NAMES, run_suite


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (MPoly, QSeries, RatFunc)):
        return repr(x)
    if x is INFINITE:
        return "infinite"
    if isinstance(x, str):
        return x
    return str(x)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj, key=str):
            yield from _flatten(obj[k], f"{prefix}{k}.")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def _pretty(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in sorted(obj, key=str):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                print(f"{pad}{k}:")
                _pretty(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                _pretty(v, indent)
                print()
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{obj}")


def emit(report, fmt):
    report = _jsonable(report)
    if fmt == "json":
        print(dumps_canonical(report))
    elif fmt == "csv":
        print("key,value")
        for k, v in _flatten(report):
            print(f"{k},{v}")
    else:
        _pretty(report)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_cohomology(args):
    inv = geometric_from_ch(args.l)
    tables = load_fixture("localization_tables.json")["tables"]
    report = {
        "l": args.l,
        "inversion": {k: dict(v) for k, v in inv.items()},
        "localization": [
            {"name": t["name"],
             "sum": localization_sum(FixedPointTable.from_json_obj(t)),
             "expected": t["expected_sum"],
             "asserted": t["asserted"]}
            for t in tables],
    }
    emit(report, args.emit)
    return 0


def cmd_charge(args):
    ells = solve_functionals(args.l)
    report = {
        "l": args.l,
        "functionals": ells,
        "charges": {lab: z for lab, z in charge_table(args.l).items()},
    }
    emit(report, args.emit)
    return 0


def cmd_rvsc(args):
    Z = charge_table(2)
    A = Alcove.from_fixture()
    pos = positivity_on_alcove(Z, A, grid=args.grid)
    walls = {}
    ok = not pos["failures"]
    for name, theta, H in b2_walls():
        orders = {lab: vanishing_order_on_wall(Z[lab], H) for lab in Z}
        vanishing = [lab for lab, o in orders.items()
                     if o is INFINITE or o > 0]
        walls[name] = {"theta": theta, "orders": orders,
                       "vanishing": vanishing}
        ok = ok and vanishing == [theta] and orders[theta] == 2 \
            and orders["L4"] == 0
    report = {"grid": args.grid, "interior_points": pos["points"],
              "positivity_failures": pos["failures"], "walls": walls,
              "pass": ok}
    emit(report, args.emit)
    return 0 if ok else 1


def cmd_cross_wall(args):
    if args.l is not None:
        classes = general_crossed_classes(args.l, args.reading)
        emit({"l": args.l, "classes": classes}, args.emit)
        return 0
    cw = cross_wall_b2(args.wall)
    report = {
        "wall": args.wall,
        "simples": [c.coords for c in cw["simples"]],
        "projectives": [c.coords for c in cw["projectives"]],
        "gram": cw["gram"],
    }
    if args.wall == "z0":
        from .charge import crossed_charges
        Z = charge_table(2)
        report["crossed_charges"] = crossed_charges(
            Z, class_matrix(cw["simples"]))
    emit(report, args.emit)
    return 0


def cmd_poincare(args):
    s = koszul_trivial_sum(args.n, args.m, args.p, args.order)
    closed = koszul_closed_form(args.n, args.m, args.p)
    report = {
        "params": {"n": args.n, "m": args.m, "p": args.p, "order": args.order},
        "koszul_sum": s,
        "koszul_closed": closed,
        "koszul_equal": s == expand(closed, args.order),
        "kac_cheung": kc_identity_check(args.n),
    }
    if args.tau:
        tau = tuple(int(x) for x in args.tau.split(","))
        n = sum(tau)
        report["fake_degree"] = expand(fake_degree(tau), n * (n - 1) // 2 + 1)
    emit(report, args.emit)
    return 0 if report["koszul_equal"] and report["kac_cheung"] else 1


def _load_quiver(args):
    if args.quiver:
        with open(args.quiver, "r", encoding="utf-8") as fh:
            return Quiver.from_json_obj(json.load(fh))
    return Quiver.from_fixture(args.fixture)


def _parse_sections(raw):
    """Explicit sections: per-step {vertex: [section, ...]} objects, each
    section a list of image coordinate vectors (one per generator of the
    mutated slot, over the basis one degree up in the target slot)."""
    if raw is None:
        return None
    try:
        with open(raw, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError:
        data = json.loads(raw)
    if isinstance(data, dict):
        data = [data]
    return [{v: [[[Fraction(str(c)) for c in vec] for vec in sec]
                 for sec in secs] for v, secs in step.items()}
            for step in data]


def _run_steps(args, verify=False):
    q = _load_quiver(args)
    A = build_algebra(q, args.trunc)
    state = MutationState(A)
    secs = _parse_sections(args.sections)
    steps = []
    ok = True
    for k in range(args.steps):
        given = secs[k] if secs and k < len(secs) else None
        r = truncated_mutation(state, theta=args.theta, sections=given,
                               allow_noninjective=args.allow_noninjective)
        step = {"step": k + 1, "theta": r["theta"],
                "injective": r["injective"],
                "verdict": "injective" if r["injective"] else "not injective",
                "section_counts": r["section_counts"],
                "dim_vector": r["dim_vector"], "dims": r["dims"],
                "total_dim": r["total_dim"], "kclass": r["kclass"]}
        ok = ok and r["injective"]
        if verify:
            step["pairing"] = verify_dual_pairing(state)
            ok = ok and step["pairing"]
        steps.append(step)
    return ok, {"quiver": args.fixture if not args.quiver else args.quiver,
                "trunc": args.trunc, "steps": steps}


def cmd_mutate(args):
    try:
        ok, report = _run_steps(args, verify=False)
    except (MutationError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    emit(report, args.emit)
    return 0 if ok else 1


def cmd_verify(args):
    try:
        ok, report = _run_steps(args, verify=True)
    except (MutationError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report["pass"] = ok
    emit(report, args.emit)
    return 0 if ok else 1


def cmd_suite(args):
    status, report = run_suite(args.name)
    emit(report, args.emit)
    return status


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_quiver_opts(p):
    p.add_argument("--quiver", help="path to a quiver JSON file")
    p.add_argument("--fixture", default="quiver_perv_p2.json",
                   help="bundled quiver fixture name (default perv)")
    p.add_argument("--theta", help="vertex to mutate at (default: quiver's)")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--trunc", type=int, default=6,
                   help="truncation degree D (default 6)")
    p.add_argument("--sections",
                   help="JSON (inline or a file path) giving explicit "
                        "degree-1 sections per step; default is a basis of "
                        "the full degree-1 Hom component")
    p.add_argument("--allow-noninjective", action="store_true",
                   help="push through a non-injective coevaluation")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="wallcross",
        description="Exact wall-crossing computations: charges, alcoves, "
                    "graded characters, and truncated quiver mutations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("json", "csv", "pretty"),
                        default="pretty")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("cohomology", help="basis inversion and localization sums")
    p.add_argument("--l", type=int, default=2)
    p.set_defaults(func=cmd_cohomology)

    p = add_parser("charge", help="solved functionals and central charges")
    p.add_argument("--l", type=int, default=2)
    p.set_defaults(func=cmd_charge)

    p = add_parser("rvsc", help="alcove positivity and wall vanishing orders")
    p.add_argument("--grid", type=int, default=20)
    p.set_defaults(func=cmd_rvsc)

    p = add_parser("cross-wall", help="wall-crossed classes and charges")
    p.add_argument("--wall", choices=("z0", "z1", "z2", "z3"), default="z0")
    p.add_argument("--l", type=int, help="general parametrization instead")
    p.add_argument("--reading", choices=("consistent", "literal"))
    p.set_defaults(func=cmd_cross_wall)

    p = add_parser("poincare", help="graded character identities")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--tau", help="partition like 3,1 to print its fake degree")
    p.set_defaults(func=cmd_poincare)

    p = add_parser("mutate", help="run truncated mutations")
    _add_quiver_opts(p)
    p.set_defaults(func=cmd_mutate)

    p = add_parser("verify", help="mutate and check the dual pairing")
    _add_quiver_opts(p)
    p.set_defaults(func=cmd_verify)

    p = add_parser("suite", help="run a named acceptance-check suite")
    p.add_argument("name", choices=["all"] + SUITE_NAMES)
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
