"""Command-line front end.

Subcommands: lattice (build/export), convert (coordinates and phi),
solve (domino game with ASCII playback), verify (named suites).
Exit codes: 0 success, 1 usage, 2 domain violation, 3 verification failure.
"""

import argparse
import json
import sys

from . import io as serial
from .domino import (build_d_a, circle_to_partition_D, gamma_pt, gamma_tp,
                     is_red, partition_to_circle_D)
from .isomorphism import phi, phi_inverse
from .poset import j_lattice, m_lattice
from .solver import solve_domino
from .typea import (BoxSpec, CircleState, build_l_a, circle_to_partition_L,
                    diagonal_to_partition, ideal_to_partition,
                    partition_to_circle_L, partition_to_diagonal,
                    partition_to_tableau_L, tableau_to_partition_L,
                    validate_partition)
from .verify import SUITES, run_suite

USAGE_ERROR, DOMAIN_ERROR, VERIFY_ERROR = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def parse_partition(spec, text):
    """Comma-separated parts, first row first; trailing zeros may be omitted."""
    text = text.strip().strip("()")
    parts = [p.strip() for p in text.split(",")] if text else []
    try:
        values = [int(p) for p in parts if p != ""]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    if len(values) > spec.k:
        raise ValueError(f"too many parts for k={spec.k}")
    values += [0] * (spec.k - len(values))
    return validate_partition(spec, tuple(values))


def parse_tableau(spec, text):
    text = text.strip().strip("{}")
    try:
        entries = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise ValueError(f"cannot parse tableau {text!r}") from None
    return entries


def parse_circle(spec, text, side):
    bits = text.strip()
    if not set(bits) <= {"0", "1"}:
        raise ValueError(f"cannot parse circle bitstring {text!r}")
    return CircleState(tuple(int(b) for b in bits), side)


def parse_diagonal(spec, text):
    text = text.strip().strip("()")
    try:
        diag = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise ValueError(f"cannot parse diagonal sequence {text!r}") from None
    return diag


def fmt_partition(parts):
    return ",".join(str(p) for p in parts)


def fmt_tableau(entries):
    return "{" + ",".join(str(e) for e in entries) + "}"


def fmt_circle(state):
    return "".join(str(b) for b in state.bits)


def fmt_diagonal(diag):
    return "(" + ",".join(str(d) for d in diag) + ")"


def _to_partition(spec, system, side, text):
    if system == "part":
        return parse_partition(spec, text)
    if system == "tab":
        entries = parse_tableau(spec, text)
        if side == "L":
            return tableau_to_partition_L(spec, tuple(sorted(entries)))
        return gamma_tp(spec, entries)
    if system == "circ":
        state = parse_circle(spec, text, side)
        if side == "L":
            return circle_to_partition_L(spec, state)
        return circle_to_partition_D(spec, state)
    if system == "diag":
        return diagonal_to_partition(spec, parse_diagonal(spec, text))
    raise ValueError(f"unknown coordinate system {system!r}")


def _from_partition(spec, system, side, parts):
    if system == "part":
        return fmt_partition(parts)
    if system == "tab":
        if side == "L":
            return fmt_tableau(partition_to_tableau_L(spec, parts))
        return fmt_tableau(gamma_pt(spec, parts))
    if system == "circ":
        if side == "L":
            return fmt_circle(partition_to_circle_L(spec, parts))
        return fmt_circle(partition_to_circle_D(spec, parts))
    if system == "diag":
        return fmt_diagonal(partition_to_diagonal(spec, parts))
    raise ValueError(f"unknown coordinate system {system!r}")


def render_partition(spec, parts, highlight_corner=True):
    """One character per box: '#' shaded, '.' unshaded, 'r' unshaded red corner."""
    rows = []
    for r in range(1, spec.k + 1):
        row = []
        for c in range(1, spec.cols + 1):
            shaded = c <= parts[r - 1]
            glyph = "#" if shaded else "."
            if (not shaded and highlight_corner and r == 1 and c == spec.cols
                    and is_red(spec, r, c)):
                glyph = "r"
            row.append(glyph)
        rows.append("".join(row))
    return "\n".join(rows)


def _vertex_doc(spec, family, parts):
    if family == "A":
        tab, circ = partition_to_tableau_L(spec, parts), partition_to_circle_L(spec, parts)
    else:
        tab, circ = gamma_pt(spec, parts), partition_to_circle_D(spec, parts)
    return {
        "part": fmt_partition(parts),
        "tab": fmt_tableau(tab),
        "circ": fmt_circle(circ),
        "diag": fmt_diagonal(partition_to_diagonal(spec, parts)),
    }


def cmd_lattice(args):
    if args.poset is not None:
        with open(args.poset, encoding="utf-8") as handle:
            P = serial.poset_from_json(handle.read())
        L = j_lattice(P) if args.construction == "J" else m_lattice(P)
        if args.format == "dot":
            sys.stdout.write(serial.lattice_to_dot(L, name="ideals"))
        else:
            sys.stdout.write(serial.lattice_to_json(L))
        return 0
    spec = _spec_from(args)
    if args.family == "A":
        L = build_l_a(spec).relabel(lambda i: ideal_to_partition(spec, i))
    else:
        L = build_d_a(spec)
    if args.format == "dot":
        sys.stdout.write(serial.lattice_to_dot(L, name=f"{args.family}_{spec.k}_{spec.N}"))
        return 0
    ranks = L.ranks
    doc = {
        "family": args.family,
        "k": spec.k,
        "N": spec.N,
        "vertices": [dict(_vertex_doc(spec, args.family, p), rank=ranks[p])
                     for p in L.vertices],
        "edges": [{"from": fmt_partition(a), "to": fmt_partition(b), "color": c}
                  for a, b, c in L.edges],
    }
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def cmd_convert(args):
    spec = _spec_from(args)
    if args.map:
        parts = parse_partition(spec, args.value)
        out = phi(spec, parts) if args.map == "phi" else phi_inverse(spec, parts)
        print(fmt_partition(out))
        return 0
    system, _, side = args.src.partition(":")
    side = side or "L"
    if side not in ("L", "D"):
        raise ValueError(f"unknown side {side!r}; use L or D")
    parts = _to_partition(spec, system, side, args.value)
    print(_from_partition(spec, args.dest, side, parts))
    return 0


def cmd_solve(args):
    spec = _spec_from(args)
    sigma = parse_partition(spec, args.src)
    tau = parse_partition(spec, args.dest)
    sol = solve_domino(spec, sigma, tau, via=args.via)
    if args.format == "json":
        doc = {
            "distance": sol.distance,
            "per_color": {str(c): n for c, n in sorted(sol.per_color.items())},
            "waypoint": fmt_partition(sol.waypoint),
            "path": [fmt_partition(p) for p in sol.path.vertices],
            "steps": [{"color": c, "direction": d} for c, d in sol.path.steps],
        }
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return 0
    print(f"distance: {sol.distance}")
    census = " ".join(f"{c}:{n}" for c, n in sorted(sol.per_color.items())) or "-"
    print(f"moves per color: {census}")
    print(f"waypoint ({args.via}): {fmt_partition(sol.waypoint)}")
    print()
    print(fmt_partition(sol.path.vertices[0]))
    print(render_partition(spec, sol.path.vertices[0]))
    for (color, direction), vert in zip(sol.path.steps, sol.path.vertices[1:]):
        print(f"  | move color {color} ({direction})")
        print(f"  v")
        print(fmt_partition(vert))
        print(render_partition(spec, vert))
    return 0


def cmd_verify(args):
    names = SUITES if args.suite == "all" else (args.suite,)
    report = {}
    for name in names:
        report[name] = run_suite(name, k=args.k, N=args.N, seed=args.seed)
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0 if all(r["passed"] for r in report.values()) else VERIFY_ERROR


def _spec_from(args):
    try:
        return BoxSpec(args.k, args.N)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR) from None


def build_parser():
    parser = _Parser(prog="dominolattice",
                     description="Type-A fundamental lattices and the Domino Game")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="build and export a lattice")
    p.add_argument("--family", choices=("A", "D"), default="A")
    p.add_argument("-k", type=int)
    p.add_argument("-N", type=int)
    p.add_argument("--poset", metavar="FILE",
                   help="build the ideal/filter lattice of a poset JSON file")
    p.add_argument("--construction", choices=("J", "M"), default="J")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("convert", help="convert coordinates or apply phi")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--from", dest="src", metavar="SYSTEM[:SIDE]",
                   help="part, tab, circ, or diag, optionally :L or :D")
    p.add_argument("--to", dest="dest", choices=("part", "tab", "circ", "diag"))
    p.add_argument("--map", choices=("phi", "phi-inverse"))
    p.add_argument("value")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("solve", help="solve the domino game between two shapes")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dest", required=True)
    p.add_argument("--via", choices=("join", "meet"), default="join")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p.add_argument("-k", type=int, default=2)
    p.add_argument("-N", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "convert" and not args.map and not (args.src and args.dest):
        parser.error("convert needs either --map or both --from and --to")
    if args.command == "lattice" and args.poset is None \
            and (args.k is None or args.N is None):
        parser.error("lattice needs -k and -N (or --poset FILE)")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
