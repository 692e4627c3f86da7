"""Command-line interface.

Exit status: 0 on success, 1 on usage errors (bad flags, malformed angles, exceeded
budgets), 2 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .angles import Angle, parse_angle, preperiod_and_period, double
from .classify import census, classify, kneading, representative
from .errors import BudgetExceeded, InternalConsistencyError
from .horseshoe import canonic_horseshoe, in_Dinf, itinerary, prune
from .pullback import build
from .rotational import (
    enumerate_semicircle_orbits,
    is_rotational,
    minimal_rotational_set,
    sturmian_orbit,
)
from .serialize import (
    census_csv,
    encode_pullback_json,
    encode_verdict_json,
    format_angle,
    format_rho,
    render_svg,
    RenderSpec,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _angle_arg(text: str) -> Angle:
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rho_arg(text: str) -> Fraction:
    try:
        rho = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rotation number {text!r}")
    if not 0 <= rho < 1:
        raise argparse.ArgumentTypeError("rotation number must lie in [0, 1)")
    return rho


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_classify(args) -> str:
    v = classify(args.theta)
    if args.json:
        return encode_verdict_json(v)
    head = f"{format_angle(v.theta)}: {v.kind.value}"
    if v.depth is not None:
        head += f" (depth {v.depth})"
    out = [head]
    if args.trace:
        for s in v.stages:
            line = (
                f"  stage {s.index}: theta={format_angle(s.theta)} period={s.period} "
                f"rho={format_rho(s.rho)} A={{{', '.join(map(format_angle, s.A_points))}}} "
                f"-> {s.outcome.value}"
            )
            if s.next_theta is not None:
                line += f" {format_angle(s.next_theta)}"
            out.append(line)
    return "\n".join(out) + "\n"


def _cmd_rotation(args) -> str:
    theta = representative(args.theta)
    A = minimal_rotational_set(theta)
    if args.kmax is not None or args.check:
        kmax = args.kmax
        if kmax is None:
            pre, per = preperiod_and_period(double(theta))
            kmax = max(per, A.period)
        rotational = [
            o for _, o in enumerate_semicircle_orbits(theta, kmax) if is_rotational(o) is not None
        ]
        if A.period <= kmax and rotational != [frozenset(A.points)]:
            raise InternalConsistencyError(
                f"brute force found {len(rotational)} rotational orbits in the semicircle "
                f"at {theta} (k <= {kmax}), disagreeing with rotation number {A.rho}"
            )
    if args.json:
        return _dump(
            {
                "theta": format_angle(theta),
                "rho": format_rho(A.rho),
                "A": [format_angle(a) for a in A.points],
            }
        )
    return f"theta={format_angle(theta)} rho={format_rho(A.rho)} A={{{', '.join(map(format_angle, A.points))}}}\n"


def _cmd_sturmian(args) -> str:
    A = sturmian_orbit(args.rho)
    data = {
        "rho": format_rho(A.rho),
        "points": [format_angle(a) for a in A.points],
        "gaps": [[format_angle(g.start), format_angle(g.end)] for g in A.gaps],
        "major_gap": [format_angle(A.major_gap.start), format_angle(A.major_gap.end)],
    }
    if args.json:
        return _dump(data)
    return f"rho={data['rho']} points={{{', '.join(data['points'])}}}\n"


def _arc_pair(arc):
    return [format_angle(arc.start), format_angle(arc.end)]


def _cmd_horseshoe(args) -> str:
    if args.rho is not None:
        A = sturmian_orbit(args.rho)
    elif args.theta is not None:
        A = minimal_rotational_set(representative(args.theta))
    else:
        raise UsageError("horseshoe: give THETA or --rho")
    h = canonic_horseshoe(A)
    data = {
        "rho": format_rho(A.rho),
        "k": h.period,
        "A": [format_angle(a) for a in A.points],
        "I": _arc_pair(h.I),
        "Iprime": _arc_pair(h.Iprime),
        "I1": _arc_pair(h.I1),
        "H": [_arc_pair(a) for a in h.H],
    }
    for x in args.point or ():
        entry = {"x": format_angle(x), "in_Dinf": in_Dinf(h, x)}
        if entry["in_Dinf"]:
            it = itinerary(h, x)
            entry["itinerary"] = [it.preperiodic, it.repeating]
            entry["prune"] = format_angle(prune(h, x))
        data.setdefault("points", []).append(entry)
    if args.json:
        return _dump(data)
    out = [
        f"k={data['k']} rho={data['rho']} I=[{', '.join(data['I'])}] "
        f"I'=[{', '.join(data['Iprime'])}] I1=({', '.join(data['I1'])})"
    ]
    for entry in data.get("points", []):
        if entry["in_Dinf"]:
            pre, rep = entry["itinerary"]
            out.append(f"  {entry['x']}: in D_inf, itinerary {pre}({rep}), prune {entry['prune']}")
        else:
            out.append(f"  {entry['x']}: not in D_inf")
    return "\n".join(out) + "\n"


def _cmd_kneading(args) -> str:
    w = kneading(args.theta)
    if args.json:
        return _dump(
            {
                "theta": format_angle(args.theta),
                "preperiodic": w.preperiodic,
                "repeating": w.repeating,
                "aperiodic": w.is_aperiodic,
            }
        )
    return f"{format_angle(args.theta)}: {w}{' aperiodic' if w.is_aperiodic else ''}\n"


def _cmd_pullback(args) -> str:
    L = build(args.theta, args.depth)
    if args.format == "svg":
        return render_svg(L, RenderSpec(size=args.size))
    return encode_pullback_json(L)


def _cmd_census(args) -> str:
    return census_csv(census(args.max_den, args.filter, parallel=args.parallel))


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lamina", description="Critical diameters of the doubling map.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("-o", "--out", metavar="FILE", help="write output to FILE")
        return p

    p = add("classify", _cmd_classify, "decide compatibility with a non-degenerate lamination")
    p.add_argument("theta", type=_angle_arg)
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true", help="print one line per stage")

    p = add("rotation", _cmd_rotation, "rotation number and minimal rotational set")
    p.add_argument("theta", type=_angle_arg)
    p.add_argument("--json", action="store_true")
    p.add_argument("--check", action="store_true", help="cross-check by brute force")
    p.add_argument("--kmax", type=_positive, help="period cap for the brute-force check")

    p = add("sturmian", _cmd_sturmian, "rotational orbit of a rotation number")
    p.add_argument("rho", type=_rho_arg)
    p.add_argument("--json", action="store_true")

    p = add("horseshoe", _cmd_horseshoe, "canonic traveling horseshoe")
    p.add_argument("theta", type=_angle_arg, nargs="?")
    p.add_argument("--rho", type=_rho_arg)
    p.add_argument("--point", type=_angle_arg, action="append", help="angle to prune")
    p.add_argument("--json", action="store_true")

    p = add("kneading", _cmd_kneading, "kneading itinerary of the critical value")
    p.add_argument("theta", type=_angle_arg)
    p.add_argument("--json", action="store_true")

    p = add("pullback", _cmd_pullback, "finite pullback lamination")
    p.add_argument("theta", type=_angle_arg)
    p.add_argument("--depth", type=_positive, default=4)
    p.add_argument("--format", choices=("svg", "json"), default="json")
    p.add_argument("--size", type=_positive, default=RenderSpec.size)

    p = add("census", _cmd_census, "classify every angle up to a denominator bound")
    p.add_argument("--max-den", type=_positive, required=True)
    p.add_argument("--filter", choices=("odd", "two-mod-four", "all"), default="odd")
    p.add_argument("--parallel", type=_positive, default=1)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        text = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ValueError, BudgetExceeded) as exc:
        print(f"lamina: error: {exc}", file=sys.stderr)
        return 1
    except InternalConsistencyError as exc:
        print(f"lamina: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
