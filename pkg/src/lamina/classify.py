"""Decide whether a critical diameter admits a compatible non-degenerate lamination.

The procedure renormalizes through canonic horseshoes until it reaches one of the two
basic cases:

* basic rotational: the diameter touches the minimal rotational set, so every
  compatible lamination is degenerate;
* basic non-rotational: the critical value orbit has no block structure over the
  rotational set, so a non-degenerate lamination exists.

A critical value that is not periodic settles the question immediately.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional

from .angles import (
    Angle,
    antipode,
    as_angle,
    double,
    preperiod_and_period,
)
from .errors import InternalConsistencyError
from .horseshoe import canonic_horseshoe, in_Dinf, prune
from .rotational import HALF, minimal_rotational_set

__all__ = [
    "Outcome",
    "VerdictKind",
    "Stage",
    "Verdict",
    "KneadingWord",
    "CensusRecord",
    "representative",
    "classify",
    "kneading",
    "census",
    "census_angles",
]


class Outcome(enum.Enum):
    BASIC_ROTATIONAL = "basic_rotational"
    BASIC_NON_ROTATIONAL = "basic_non_rotational"
    RENORMALIZED = "renormalized"


class VerdictKind(enum.Enum):
    NON_DEGENERATE_APERIODIC = "non_degenerate_aperiodic"
    NON_DEGENERATE = "non_degenerate"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Stage:
    index: int
    theta: Angle
    period: int
    rho: Fraction
    A_points: tuple[Angle, ...]
    outcome: Outcome
    next_theta: Optional[Angle] = None


@dataclass(frozen=True)
class Verdict:
    # the input angle; verdicts of theta and theta + 1/2 compare equal
    theta: Angle = field(compare=False)
    kind: VerdictKind
    stages: tuple[Stage, ...] = ()

    @property
    def depth(self) -> Optional[int]:
        if self.kind is VerdictKind.NON_DEGENERATE_APERIODIC:
            return None
        return len(self.stages)

    @property
    def non_degenerate(self) -> bool:
        return self.kind is not VerdictKind.DEGENERATE

    @property
    def rho_chain(self) -> tuple[Fraction, ...]:
        return tuple(s.rho for s in self.stages)


def representative(theta: Angle) -> Angle:
    """The endpoint of the diameter through theta that lies in [0, 1/2)."""
    return theta if theta < HALF else antipode(theta)


def _period_of_critical_value(theta: Angle) -> Optional[int]:
    pre, per = preperiod_and_period(double(theta))
    return per if pre == 0 else None


def classify(theta) -> Verdict:
    theta = as_angle(theta)
    t = representative(theta)
    n = _period_of_critical_value(t)
    if n is None:
        return Verdict(theta, VerdictKind.NON_DEGENERATE_APERIODIC)
    stages = []
    while True:
        A = minimal_rotational_set(t)
        rho, pts = A.rho, A.points
        if t in pts or antipode(t) in pts:
            stages.append(Stage(len(stages), t, n, rho, pts, Outcome.BASIC_ROTATIONAL))
            return Verdict(theta, VerdictKind.DEGENERATE, tuple(stages))
        h = canonic_horseshoe(A)
        if not in_Dinf(h, t):
            stages.append(Stage(len(stages), t, n, rho, pts, Outcome.BASIC_NON_ROTATIONAL))
            return Verdict(theta, VerdictKind.NON_DEGENERATE, tuple(stages))
        k = A.period
        if n % k:
            raise InternalConsistencyError(
                f"renormalizing {t}: period {k} does not divide critical period {n}"
            )
        nxt = representative(prune(h, t))
        if nxt.num == 0:
            raise InternalConsistencyError(f"{t} renormalizes onto the diameter at 0")
        stages.append(Stage(len(stages), t, n, rho, pts, Outcome.RENORMALIZED, nxt))
        t, n = nxt, n // k


@dataclass(frozen=True)
class KneadingWord:
    """Itinerary of the critical value relative to the halves cut by the diameter.

    ``1`` is the open arc (theta, theta'), ``2`` the open arc (theta', theta), ``*`` the
    endpoints.  Stored in shortest eventually periodic form.
    """

    preperiodic: str
    repeating: str

    @property
    def is_aperiodic(self) -> bool:
        return bool(self.preperiodic)

    def __str__(self) -> str:
        return f"{self.preperiodic}({self.repeating})"


def _minimal_form(pre: str, rep: str) -> tuple[str, str]:
    for d in range(1, len(rep) + 1):
        if len(rep) % d == 0 and rep[:d] * (len(rep) // d) == rep:
            rep = rep[:d]
            break
    while pre and pre[-1] == rep[-1]:
        pre, rep = pre[:-1], rep[-1] + rep[:-1]
    return pre, rep


def kneading(theta) -> KneadingWord:
    theta = as_angle(theta)
    tp = antipode(theta)
    p, q = theta
    # halves compared on a common denominator
    seen: dict[Angle, int] = {}
    symbols = []
    x = double(theta)
    while x not in seen:
        seen[x] = len(symbols)
        if x == theta or x == tp:
            symbols.append("*")
        else:
            # position of x relative to theta, in [0, 1)
            rel = (x.num * q - p * x.den) % (q * x.den)
            symbols.append("1" if 2 * rel < q * x.den else "2")
        x = double(x)
    start = seen[x]
    pre, rep = _minimal_form("".join(symbols[:start]), "".join(symbols[start:]))
    return KneadingWord(pre, rep)


@dataclass(frozen=True)
class CensusRecord:
    theta: Angle
    verdict: Verdict

    @property
    def denominator(self) -> int:
        return self.theta.den

    @property
    def sigma_period(self) -> Optional[int]:
        return self.verdict.stages[0].period if self.verdict.stages else None


_FILTERS = {
    "odd": lambda q: q % 2 == 1,
    "two-mod-four": lambda q: q % 4 != 0,
    "all": lambda q: True,
}


def census_angles(q_max: int, filter: str = "odd") -> Iterator[Angle]:
    """Reduced p/q in (0, 1/2) with q <= q_max, ordered by q then p."""
    try:
        keep = _FILTERS[filter]
    except KeyError:
        raise ValueError(f"unknown census filter {filter!r}; use one of {sorted(_FILTERS)}")
    for q in range(2, q_max + 1):
        if not keep(q):
            continue
        for p in range(1, (q + 1) // 2):
            if 2 * p < q and gcd(p, q) == 1:
                yield Angle._raw(p, q)


def _classify_batch(angles: list[Angle]) -> list[CensusRecord]:
    return [CensusRecord(a, classify(a)) for a in angles]


def census(q_max: int, filter: str = "odd", parallel: int = 1) -> list[CensusRecord]:
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    angles = list(census_angles(q_max, filter))
    if parallel <= 1 or len(angles) < 2:
        return _classify_batch(angles)
    chunk = max(1, len(angles) // (parallel * 8))
    batches = [angles[i : i + chunk] for i in range(0, len(angles), chunk)]
    out: list[CensusRecord] = []
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        for recs in pool.map(_classify_batch, batches):
            out.extend(recs)
    return out
