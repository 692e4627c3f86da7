"""Canonic traveling horseshoe of a rotational orbit and its pruning map.

For a rotational orbit A of period k >= 2, the smallest gap (2a, 2b) of A has two
preimage arcs I = [a, b] and I' = [a', b'] in the major gap.  sigma^k maps each of them
homeomorphically onto the closed major gap, so the points whose sigma^k-orbit stays in
I u I' form a Cantor set on which sigma^k is the one-sided 2-shift.  Pruning sends such
a point to the binary angle spelled by its I/I' itinerary.
"""
from __future__ import annotations

from dataclasses import dataclass

from .angles import (
    Angle,
    Arc,
    OrbitInfo,
    antipode,
    binary_word_to_angle,
    ccw_distance,
    double_n,
    in_arc,
)
from .errors import InternalConsistencyError, NotInHorseshoe
from .rotational import RotationalOrbit

__all__ = [
    "Horseshoe",
    "Itinerary",
    "canonic_horseshoe",
    "in_Dinf",
    "itinerary",
    "prune",
    "has_block_structure",
]


@dataclass(frozen=True)
class Horseshoe:
    base: RotationalOrbit
    I: Arc
    Iprime: Arc
    I1: Arc
    H: tuple[Arc, Arc, Arc, Arc]

    @property
    def period(self) -> int:
        return self.base.period

    @property
    def alpha(self) -> Angle:
        return self.I.start

    @property
    def beta(self) -> Angle:
        return self.I.end

    def in_D(self, x: Angle) -> bool:
        return in_arc(x, self.I) or in_arc(x, self.Iprime)

    def in_H(self, x: Angle) -> bool:
        return any(in_arc(x, piece) for piece in self.H)


@dataclass(frozen=True)
class Itinerary:
    preperiodic: str
    repeating: str

    def __str__(self) -> str:
        return f"{self.preperiodic}({self.repeating})"


def _shrink(arc: Arc, at_start: bool, length: Angle, k: int) -> Arc:
    # the sub-arc of `arc` that sigma^k (expanding by 2^k) maps onto an arc of `length`
    sub = Angle(length.num, length.den << k)
    if at_start:
        return Arc.closed(arc.start, arc.start + sub)
    return Arc.closed(arc.end - sub, arc.end)


def canonic_horseshoe(A: RotationalOrbit) -> Horseshoe:
    k = A.period
    if k < 2:
        raise ValueError("the fixed orbit {0} has no horseshoe")
    I1 = A.smallest_gap
    lo, hi = I1.start, I1.end
    # preimages of the closed smallest gap: halve the endpoints, or halve and add 1/2
    first = Arc.closed(Angle(lo.num, 2 * lo.den), Angle(hi.num, 2 * hi.den))
    second = Arc.closed(antipode(first.start), antipode(first.end))
    pts = set(A.points)
    if first.end in pts and second.start in pts:
        I, Iprime = first, second
    elif second.end in pts and first.start in pts:
        I, Iprime = second, first
    else:
        raise InternalConsistencyError(f"no preimage arc of {I1} ends on the orbit")
    beta, alpha_p = I.end, Iprime.start
    if double_n(beta, k) != beta or double_n(alpha_p, k) != alpha_p:
        raise InternalConsistencyError("horseshoe endpoints are not sigma^k-fixed")
    major = A.major_gap.closure()
    for x in (I.start, I.end, Iprime.start, Iprime.end):
        if not in_arc(x, major):
            raise InternalConsistencyError(f"{x} lies outside the major gap {major}")
    width = ccw_distance(I.start, I.end)
    # sigma^k maps I and I' onto [alpha', beta], sending alpha -> alpha', beta -> beta
    H = (
        _shrink(I, False, width, k),  # I00: lands in I, adjacent to beta
        _shrink(I, True, width, k),  # I01: lands in I', adjacent to alpha
        _shrink(Iprime, False, width, k),  # I'10: lands in I
        _shrink(Iprime, True, width, k),  # I'11: lands in I'
    )
    return Horseshoe(A, I, Iprime, I1, H)


def _digit(h: Horseshoe, x: Angle):
    if in_arc(x, h.I):
        return "0"
    if in_arc(x, h.Iprime):
        return "1"
    return None


def _return_orbit(h: Horseshoe, x: Angle):
    """Digits of the sigma^k-orbit of x and the index where its cycle starts.

    Returns None as soon as an iterate leaves I u I'.
    """
    k = h.period
    seen: dict[Angle, int] = {}
    digits = []
    y = x
    while y not in seen:
        d = _digit(h, y)
        if d is None:
            return None
        seen[y] = len(digits)
        digits.append(d)
        y = double_n(y, k)
    return digits, seen[y]


def in_Dinf(h: Horseshoe, x: Angle) -> bool:
    return _return_orbit(h, x) is not None


def itinerary(h: Horseshoe, x: Angle) -> Itinerary:
    res = _return_orbit(h, x)
    if res is None:
        raise NotInHorseshoe(f"{x} leaves the horseshoe under sigma^{h.period}")
    digits, start = res
    return Itinerary("".join(digits[:start]), "".join(digits[start:]))


def prune(h: Horseshoe, x: Angle) -> Angle:
    it = itinerary(h, x)
    return binary_word_to_angle(it.preperiodic, it.repeating)


def has_block_structure(P: OrbitInfo, A: RotationalOrbit) -> bool:
    """Whether the periodic orbit P lies in the orbit of the canonic horseshoe of A."""
    if P.preperiod != 0:
        raise ValueError("block structure is defined here for periodic orbits only")
    h = canonic_horseshoe(A)
    return any(in_Dinf(h, x) for x in P.points)
