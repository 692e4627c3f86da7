"""Rotational periodic orbits of the doubling map.

The minimal rotational set inside a closed semicircle ``[theta, theta + 1/2]`` is a
single rotational periodic orbit whenever theta is rational.  Its rotation number is
read off a degree-one circle map with a flat spot; the orbit itself is generated from
the Sturmian word of that rotation number.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from .angles import (
    Angle,
    Arc,
    antipode,
    double,
    in_arc,
    multiplicative_order_of_two,
    sorted_angles,
)
from .errors import ContainmentError

__all__ = [
    "RotationalOrbit",
    "sturmian_orbit",
    "is_rotational",
    "rotation_number",
    "minimal_rotational_set",
    "enumerate_semicircle_orbits",
    "semicircle",
]

HALF = Angle._raw(1, 2)


def semicircle(theta: Angle) -> Arc:
    """Closed arc [theta, theta + 1/2]."""
    return Arc.closed(theta, antipode(theta))


@dataclass(frozen=True)
class RotationalOrbit:
    rho: Fraction
    points: tuple[Angle, ...]
    gaps: tuple[Arc, ...]
    major_gap: Arc

    @property
    def period(self) -> int:
        return self.rho.denominator

    @property
    def smallest_gap(self) -> Arc:
        return min(self.gaps, key=Arc.length_fraction)

    def __contains__(self, x: Angle) -> bool:
        return x in self.points

    def __len__(self) -> int:
        return len(self.points)


def _orbit_from_points(rho: Fraction, pts: Iterable[Angle]) -> RotationalOrbit:
    points = tuple(sorted_angles(pts))
    if len(points) == 1:
        gap = Arc.open(points[0], points[0])
        return RotationalOrbit(rho, points, (gap,), gap)
    gaps = tuple(
        Arc.open(points[i], points[(i + 1) % len(points)]) for i in range(len(points))
    )
    # the last gap wraps through 0
    return RotationalOrbit(rho, points, gaps, gaps[-1])


def sturmian_orbit(rho: Fraction) -> RotationalOrbit:
    """The rotational periodic orbit of rotation number ``rho = m/k``.

    The base point has binary period word ``s_j = floor((j+1)m/k) - floor(jm/k)``.
    """
    rho = Fraction(rho)
    if not 0 <= rho < 1:
        raise ValueError(f"rotation number must lie in [0, 1), got {rho}")
    m, k = rho.numerator, rho.denominator
    word = 0
    for j in range(k):
        word = 2 * word + ((j + 1) * m // k - j * m // k)
    base = Angle(word, (1 << k) - 1)
    pts = [base]
    for _ in range(k - 1):
        pts.append(double(pts[-1]))
    return _orbit_from_points(rho, pts)


def is_rotational(points: Iterable[Angle]) -> Optional[Fraction]:
    """Rotation number of a finite set that doubling permutes as a rigid rotation.

    Returns None unless doubling maps the set onto itself, shifts every point by the
    same number of places in circular order, and acts as a single cycle.
    """
    pts = sorted_angles(set(points))
    k = len(pts)
    if k == 0:
        raise ValueError("is_rotational needs a non-empty set")
    index = {p: i for i, p in enumerate(pts)}
    shift = None
    for i, p in enumerate(pts):
        j = index.get(double(p))
        if j is None:
            return None
        s = (j - i) % k
        if shift is None:
            shift = s
        elif s != shift:
            return None
    if gcd(shift, k) != 1:
        return None
    return Fraction(shift, k)


def _flat_spot_rotation_number(p: int, q: int, seed_shift: int = 0) -> Fraction:
    # Lift of F(x) = 2x on [t, t+1/2], F = 2t + 1 on [t+1/2, t+1], F(x+1) = F(x) + 1,
    # with t = p/q.  Points are integers X standing for X/q.
    x = 2 * p + seed_shift * q
    seen: dict[int, tuple[int, int]] = {}
    step = 0
    while True:
        r = x % q
        if r in seen:
            i, x0 = seen[r]
            return Fraction((x - x0) // q, step - i)
        seen[r] = (step, x)
        n = (x - p) // q
        rel = x - n * q
        if 2 * (rel - p) <= q:
            x = 2 * rel + n * q
        else:
            x = 2 * p + q + n * q
        step += 1


def _check_representative(theta: Angle) -> None:
    if not theta < HALF:
        raise ValueError(f"theta must lie in [0, 1/2), got {theta}")


def rotation_number(theta: Angle) -> Fraction:
    """Rotation number of the minimal rotational set in [theta, theta + 1/2].

    Raises ContainmentError if the resulting orbit leaves the semicircle.
    """
    _check_representative(theta)
    rho = _flat_spot_rotation_number(theta.num, theta.den)
    orbit = sturmian_orbit(rho)
    _assert_contained(theta, orbit)
    return rho


def _assert_contained(theta: Angle, orbit: RotationalOrbit) -> None:
    arc = semicircle(theta)
    for p in orbit.points:
        if not in_arc(p, arc):
            raise ContainmentError(
                f"rotational orbit of rotation number {orbit.rho} is not contained in {arc}"
            )


def minimal_rotational_set(theta: Angle) -> RotationalOrbit:
    _check_representative(theta)
    orbit = sturmian_orbit(_flat_spot_rotation_number(theta.num, theta.den))
    _assert_contained(theta, orbit)
    return orbit


def enumerate_semicircle_orbits(theta: Angle, kmax: int) -> list[tuple[int, frozenset]]:
    """All periodic orbits of period k <= kmax lying in the closed semicircle at theta.

    Brute force by interval refinement: X_n is the set of points of [theta, theta']
    whose first n images stay in the semicircle; period-k points of X_{k-1} are found
    by scanning numerators over 2^k - 1.  Independent of the flat-spot and Sturmian
    constructions, so it serves as their oracle.
    """
    _check_representative(theta)
    p, q = theta
    # level-n intervals have integer endpoints over den = 2q * 2^n (lifted coordinates)
    den = 2 * q
    pieces = [(2 * p, 2 * p + q)]
    found: list[tuple[int, frozenset]] = []
    for k in range(1, kmax + 1):
        # pieces currently describe X_{k-1} over den
        m = (1 << k) - 1
        orbits = set()
        for lo, hi in pieces:
            a0 = -((-lo * m) // den)
            a1 = (hi * m) // den
            for a in range(a0, a1 + 1):
                x = Angle(a, m)
                if multiplicative_order_of_two(x.den) != k:
                    continue
                orb = [x]
                for _ in range(k - 1):
                    orb.append(double(orb[-1]))
                orbits.add(frozenset(orb))
        found.extend((k, o) for o in sorted(orbits, key=lambda o: min(o)))
        if k == kmax:
            break
        # X_k = S cap sigma^{-1}(X_{k-1}); lift images into [2 theta, 2 theta + 1]
        t0 = 2 * p * (den // q)
        new = []
        for lo, hi in pieces:
            j0 = -((lo - t0) // den) - 1
            for j in range(j0, j0 + 3):
                c = max(lo + j * den, t0)
                d = min(hi + j * den, t0 + den)
                if c <= d:
                    new.append((c, d))
        new = sorted(set(new))
        pieces = new
        den *= 2
    return found
