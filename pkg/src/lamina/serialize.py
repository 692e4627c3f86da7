"""Deterministic text encodings: verdict JSON, census CSV, pullback JSON and SVG."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .angles import Angle
from .classify import CensusRecord, Verdict
from .pullback import PullbackLamination

__all__ = [
    "format_angle",
    "format_rho",
    "verdict_to_dict",
    "encode_verdict_json",
    "census_csv",
    "CSV_HEADER",
    "pullback_to_dict",
    "encode_pullback_json",
    "RenderSpec",
    "render_svg",
]

CSV_HEADER = ("theta", "denominator", "sigma_period", "verdict", "depth", "rho_chain")


def format_angle(x: Optional[Angle]) -> Optional[str]:
    return None if x is None else f"{x.num}/{x.den}"


def format_rho(rho: Fraction) -> str:
    return f"{rho.numerator}/{rho.denominator}"


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "theta": format_angle(v.theta),
        "verdict": v.kind.value,
        "depth": v.depth,
        "stages": [
            {
                "theta": format_angle(s.theta),
                "period": s.period,
                "rho": format_rho(s.rho),
                "A": [format_angle(a) for a in s.A_points],
                "outcome": s.outcome.value,
                "next_theta": format_angle(s.next_theta),
            }
            for s in v.stages
        ],
    }


def encode_verdict_json(v: Verdict) -> str:
    return json.dumps(verdict_to_dict(v), indent=2) + "\n"


def census_csv(records: Iterable[CensusRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        v = r.verdict
        w.writerow(
            (
                format_angle(r.theta),
                r.denominator,
                "" if r.sigma_period is None else r.sigma_period,
                v.kind.value,
                "" if v.depth is None else v.depth,
                ";".join(format_rho(rho) for rho in v.rho_chain),
            )
        )
    return buf.getvalue()


def pullback_to_dict(L: PullbackLamination) -> dict:
    return {
        "theta": format_angle(L.theta),
        "depth": L.depth,
        "leaves": [
            {"a": format_angle(leaf.a), "b": format_angle(leaf.b), "level": L.levels[leaf]}
            for leaf in L.leaves
        ],
    }


def encode_pullback_json(L: PullbackLamination) -> str:
    return json.dumps(pullback_to_dict(L), indent=2) + "\n"


@dataclass(frozen=True)
class RenderSpec:
    """Drawing options.  Widths are in disk units (the circle has radius 1)."""

    size: int = 1000
    highlight_critical: bool = True
    circle_width: float = 0.006
    leaf_width: float = 0.003
    critical_width: float = 0.008
    circle_color: str = "#000000"
    leaf_color: str = "#1f4e9e"
    critical_color: str = "#c0392b"


def _coord(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _point(t: Angle) -> tuple[str, str]:
    a = 2 * math.pi * t.num / t.den
    return _coord(math.cos(a)), _coord(math.sin(a))


def render_svg(L: PullbackLamination, spec: RenderSpec = RenderSpec()) -> str:
    """Straight-chord drawing of a pullback lamination.

    Angle t sits at (cos 2 pi t, sin 2 pi t); a y-flip keeps the picture counterclockwise.
    """
    crit = L.critical_leaf
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.size}" height="{spec.size}" '
        f'viewBox="-1.1 -1.1 2.2 2.2">',
        f"<title>pullback lamination theta={format_angle(L.theta)} depth={L.depth}</title>",
        '<g transform="scale(1,-1)">',
        f'<circle cx="0" cy="0" r="1" fill="none" stroke="{spec.circle_color}" '
        f'stroke-width="{spec.circle_width}"/>',
    ]
    for leaf in L.leaves:
        x1, y1 = _point(leaf.a)
        x2, y2 = _point(leaf.b)
        if spec.highlight_critical and leaf == crit:
            style = f'class="critical" stroke="{spec.critical_color}" stroke-width="{spec.critical_width}"'
        else:
            style = f'class="leaf" stroke="{spec.leaf_color}" stroke-width="{spec.leaf_width}"'
        lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
