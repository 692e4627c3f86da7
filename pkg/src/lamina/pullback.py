"""Finite pullback laminations of a critical diameter.

Level 0 is the diameter itself.  A leaf of level n+1 is a chord whose endpoints map to
the endpoints of a level-n leaf and which does not cross the diameter.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .angles import Angle, Leaf, antipode, as_angle, chords_linked
from .errors import BudgetExceeded, UnlinkednessError

__all__ = [
    "PullbackLamination",
    "initial",
    "extend",
    "build",
    "find_crossing",
    "leaf_budget",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 1 << 21


def leaf_budget() -> int:
    raw = os.environ.get("LAMINA_BUDGET_LEAVES")
    if not raw:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"LAMINA_BUDGET_LEAVES must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError("LAMINA_BUDGET_LEAVES must be positive")
    return value


@dataclass(frozen=True)
class PullbackLamination:
    theta: Angle
    depth: int
    levels: dict  # Leaf -> level

    @property
    def critical_leaf(self) -> Leaf:
        return Leaf(self.theta, antipode(self.theta))

    @property
    def leaves(self) -> list[Leaf]:
        return sorted_leaves(self.levels)

    @property
    def frontier(self) -> list[Leaf]:
        return sorted_leaves(l for l, i in self.levels.items() if i == self.depth)

    def level_counts(self) -> list[int]:
        counts = [0] * (self.depth + 1)
        for i in self.levels.values():
            counts[i] += 1
        return counts

    def __len__(self) -> int:
        return len(self.levels)


def _common_denominator(angles: Iterable[Angle]) -> int:
    lcm = 1
    for a in angles:
        lcm = lcm * a.den // gcd(lcm, a.den)
    return lcm


def sorted_leaves(leaves: Iterable[Leaf]) -> list[Leaf]:
    """Canonical order: by first endpoint, then second, as values in [0, 1)."""
    leaves = list(leaves)
    L = _common_denominator(a for leaf in leaves for a in leaf)
    return sorted(leaves, key=lambda l: (l[0].num * (L // l[0].den), l[1].num * (L // l[1].den)))


def initial(theta) -> PullbackLamination:
    theta = as_angle(theta)
    return PullbackLamination(theta, 0, {Leaf(theta, antipode(theta)): 0})


def _preimages(x: Angle) -> tuple[Angle, Angle]:
    half = Angle(x.num, 2 * x.den)
    return half, antipode(half)


def _side(p: int, q: int, x: Angle) -> int:
    # 0 if x is an endpoint of the diameter at p/q, 1 on the arc (theta, theta'),
    # 2 on (theta', theta)
    rel = (x.num * q - p * x.den) % (q * x.den)
    twice = 2 * rel
    span = q * x.den
    if rel == 0 or twice == span:
        return 0
    return 1 if twice < span else 2


def _crosses_any(cand: Leaf, others: list[Leaf]) -> bool:
    return any(not o.degenerate and chords_linked(cand, o) for o in others)


def extend(L: PullbackLamination) -> PullbackLamination:
    """Add the preimages of frontier leaves that are unlinked with every leaf of L.

    A preimage chord on one side of the diameter can only cross an existing leaf when
    one of them ends at theta and the other at theta' (doubling glues those two points,
    which is where crossings stop being inherited from images).  So only chords touching
    the opposite endpoint of the diameter need an explicit check.
    """
    theta = L.theta
    theta_p = antipode(theta)
    p, q = theta
    touching = {theta: [], theta_p: []}
    for leaf in L.levels:
        for end in leaf:
            if end in touching:
                touching[end].append(leaf)
    levels = dict(L.levels)
    n = L.depth + 1
    for leaf, i in L.levels.items():
        if i != L.depth:
            continue
        ends_a = _preimages(leaf[0])
        ends_b = _preimages(leaf[1])
        sides_b = [_side(p, q, y) for y in ends_b]
        for x in ends_a:
            sx = _side(p, q, x)
            for y, sy in zip(ends_b, sides_b):
                # crossing the diameter means strictly opposite open halves
                if sx and sy and sx != sy:
                    continue
                cand = Leaf(x, y)
                if cand in levels:
                    continue
                if not (sx and sy):
                    end = x if not sx else y
                    opposite = theta_p if end == theta else theta
                    if _crosses_any(cand, touching[opposite]):
                        continue
                levels[cand] = n
    return PullbackLamination(L.theta, n, levels)


def find_crossing(leaves: Iterable[Leaf]) -> Optional[tuple[Leaf, Leaf]]:
    """A pair of linked leaves, or None when the family is pairwise unlinked.

    Sweeps the circle treating each chord as a bracket pair; shared endpoints are
    ordered so that touching chords nest rather than cross.
    """
    leaves = [l for l in leaves if not l.degenerate]
    if not leaves:
        return None
    L = _common_denominator(a for leaf in leaves for a in leaf)
    events = []
    for idx, (a, b) in enumerate(leaves):
        s = a.num * (L // a.den)
        e = b.num * (L // b.den)
        events.append((e, 0, -s, idx))  # closes before opens; inner chord closes first
        events.append((s, 1, -e, idx))  # outer chord opens first
    events.sort()
    stack: list[int] = []
    for _, kind, _, idx in events:
        if kind == 1:
            stack.append(idx)
        else:
            top = stack.pop()
            if top != idx:
                return leaves[idx], leaves[top]
    return None


def build(theta, depth: int, budget: Optional[int] = None) -> PullbackLamination:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if budget is None:
        budget = leaf_budget()
    L = initial(theta)
    for _ in range(depth):
        L = extend(L)
        if len(L) > budget:
            raise BudgetExceeded(
                f"pullback of {L.theta} reached {len(L)} leaves at depth {L.depth}, "
                f"over the budget of {budget}"
            )
    crossing = find_crossing(L.levels)
    if crossing is not None:
        raise UnlinkednessError(f"leaves {crossing[0]} and {crossing[1]} cross")
    return L
