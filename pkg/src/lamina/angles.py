"""Exact arithmetic on the circle T = R/Z under the doubling map.

Angles are reduced fractions in [0, 1).  Nothing here touches floating point.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from operator import itemgetter
from typing import Iterable, Sequence, Union

__all__ = [
    "Angle",
    "Arc",
    "Leaf",
    "OrbitInfo",
    "parse_angle",
    "double",
    "double_n",
    "antipode",
    "cyclic_order",
    "in_arc",
    "ccw_distance",
    "orbit_info",
    "preperiod_and_period",
    "binary_word_to_angle",
    "chords_linked",
]

_ANGLE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class Angle(tuple):
    """A point of R/Z stored as a reduced fraction ``num/den`` with ``0 <= num < den``.

    Equality and hashing are those of the reduced pair, so two angles are equal
    exactly when they are the same point of the circle.  Ordering compares the
    representatives in [0, 1).
    """

    __slots__ = ()

    def __new__(cls, num: int, den: int = 1) -> "Angle":
        num, den = int(num), int(den)
        if den <= 0:
            raise ValueError(f"angle denominator must be positive, got {den}")
        num %= den
        g = gcd(num, den)
        return tuple.__new__(cls, (num // g, den // g))

    @classmethod
    def _raw(cls, num: int, den: int) -> "Angle":
        # caller guarantees 0 <= num < den and gcd(num, den) == 1
        return tuple.__new__(cls, (num, den))

    @classmethod
    def from_fraction(cls, value) -> "Angle":
        return cls(value.numerator, value.denominator)

    num = property(itemgetter(0))
    den = property(itemgetter(1))

    def as_fraction(self):
        from fractions import Fraction

        return Fraction(self[0], self[1])

    def __lt__(self, other: "Angle") -> bool:
        return self[0] * other[1] < other[0] * self[1]

    def __le__(self, other: "Angle") -> bool:
        return self[0] * other[1] <= other[0] * self[1]

    def __gt__(self, other: "Angle") -> bool:
        return self[0] * other[1] > other[0] * self[1]

    def __ge__(self, other: "Angle") -> bool:
        return self[0] * other[1] >= other[0] * self[1]

    def __add__(self, other):
        if isinstance(other, Angle):
            return Angle(self[0] * other[1] + other[0] * self[1], self[1] * other[1])
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Angle):
            return Angle(self[0] * other[1] - other[0] * self[1], self[1] * other[1])
        return NotImplemented

    def __str__(self) -> str:
        return f"{self[0]}/{self[1]}"

    def __repr__(self) -> str:
        return f"Angle({self[0]}/{self[1]})"

    def __getnewargs__(self):
        return (self[0], self[1])


AngleLike = Union[Angle, str, int]


def as_angle(x) -> Angle:
    if isinstance(x, Angle):
        return x
    if isinstance(x, str):
        return parse_angle(x)
    if isinstance(x, int):
        return Angle(x, 1)
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Angle(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as an angle")


def parse_angle(text: str) -> Angle:
    """Parse ``"p/q"`` or ``"p"`` into a reduced angle, wrapping mod 1."""
    m = _ANGLE_RE.match(text)
    if m is None:
        raise ValueError(f"malformed angle {text!r}; expected 'p/q' or 'p'")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise ValueError(f"zero denominator in angle {text!r}")
    return Angle(p, q)


def double(x: Angle) -> Angle:
    n, d = x
    n = 2 * n % d
    if d & 1:
        return Angle._raw(n, d)
    return Angle(n, d)


def double_n(x: Angle, k: int) -> Angle:
    """sigma^k(x)."""
    n, d = x
    return Angle(n * pow(2, k, d) % d if d > 1 else 0, d)


def antipode(x: Angle) -> Angle:
    n, d = x
    return Angle(2 * n + d, 2 * d)


def _offset(base: Angle, x: Angle) -> tuple[int, int]:
    """Counterclockwise distance from base to x as an unreduced pair (num, den), in [0, 1)."""
    den = base[1] * x[1]
    return (x[0] * base[1] - base[0] * x[1]) % den, den


def ccw_distance(a: Angle, b: Angle) -> Angle:
    """Length of the counterclockwise arc from a to b, in [0, 1)."""
    n, d = _offset(a, b)
    return Angle(n, d)


def cyclic_order(a: Angle, b: Angle, c: Angle) -> bool:
    """True iff b lies in the open counterclockwise arc (a, c)."""
    if a == b or b == c or a == c:
        raise ValueError(f"cyclic_order needs distinct angles, got {a}, {b}, {c}")
    bn, bd = _offset(a, b)
    cn, cd = _offset(a, c)
    return bn * cd < cn * bd


def _strictly_between(a: Angle, b: Angle, c: Angle) -> bool:
    # b in open ccw arc (a, c), a != c; False when b is an endpoint
    bn, bd = _offset(a, b)
    if bn == 0:
        return False
    cn, cd = _offset(a, c)
    return bn * cd < cn * bd


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc from ``start`` to ``end``.

    ``start == end`` with both ends open is the punctured circle T minus {start}; with
    either end closed it is the whole circle.
    """

    start: Angle
    end: Angle
    start_closed: bool = True
    end_closed: bool = True

    @classmethod
    def closed(cls, start: Angle, end: Angle) -> "Arc":
        return cls(start, end, True, True)

    @classmethod
    def open(cls, start: Angle, end: Angle) -> "Arc":
        return cls(start, end, False, False)

    @property
    def length(self) -> Angle:
        """Arc length as an angle; a full turn reports 0."""
        return ccw_distance(self.start, self.end)

    def length_fraction(self):
        from fractions import Fraction

        if self.start == self.end:
            return Fraction(1)
        return self.length.as_fraction()

    def closure(self) -> "Arc":
        return Arc(self.start, self.end, True, True)

    def __contains__(self, x: Angle) -> bool:
        return in_arc(x, self)

    def __str__(self) -> str:
        lb = "[" if self.start_closed else "("
        rb = "]" if self.end_closed else ")"
        return f"{lb}{self.start}, {self.end}{rb}"


def in_arc(x: Angle, arc: Arc) -> bool:
    s, e = arc.start, arc.end
    if x == s:
        return arc.start_closed or (s == e and arc.end_closed)
    if x == e:
        return arc.end_closed
    if s == e:
        return True
    return _strictly_between(s, x, e)


class Leaf(tuple):
    """An unordered pair of angles, stored smaller-first."""

    __slots__ = ()

    def __new__(cls, a: Angle, b: Angle) -> "Leaf":
        if b < a:
            a, b = b, a
        return tuple.__new__(cls, (a, b))

    a = property(itemgetter(0))
    b = property(itemgetter(1))

    @property
    def degenerate(self) -> bool:
        return self[0] == self[1]

    def image(self) -> "Leaf":
        return Leaf(double(self[0]), double(self[1]))

    def __str__(self) -> str:
        return f"{{{self[0]}, {self[1]}}}"

    def __repr__(self) -> str:
        return f"Leaf({self[0]}, {self[1]})"

    def __getnewargs__(self):
        return (self[0], self[1])


def chords_linked(u: Leaf, v: Leaf) -> bool:
    """True iff the open chords u and v cross inside the disk.

    Chords sharing an endpoint are not linked.
    """
    if u.degenerate or v.degenerate:
        raise ValueError("chords_linked is undefined for degenerate leaves")
    a, b = u
    c, d = v
    if c == a or c == b or d == a or d == b:
        return False
    return _strictly_between(a, c, b) != _strictly_between(a, d, b)


@dataclass(frozen=True)
class OrbitInfo:
    preperiod: int
    period: int
    points: tuple[Angle, ...]

    @property
    def cycle(self) -> tuple[Angle, ...]:
        return self.points[self.preperiod:]

    @property
    def is_periodic(self) -> bool:
        return self.preperiod == 0


@lru_cache(maxsize=4096)
def multiplicative_order_of_two(m: int) -> int:
    """Least n >= 1 with 2**n == 1 mod m, for odd m (1 for m == 1)."""
    if m == 1:
        return 1
    if m % 2 == 0:
        raise ValueError("2 is not invertible modulo an even number")
    r, n = 2 % m, 1
    while r != 1:
        r = 2 * r % m
        n += 1
    return n


def preperiod_and_period(x: Angle) -> tuple[int, int]:
    """(preperiod, period) of x under doubling, from the denominator alone."""
    d = x[1]
    pre = 0
    while d % 2 == 0:
        d //= 2
        pre += 1
    return pre, multiplicative_order_of_two(d)


def orbit_info(x: Angle) -> OrbitInfo:
    pre, per = preperiod_and_period(x)
    pts = [x]
    for _ in range(pre + per - 1):
        pts.append(double(pts[-1]))
    return OrbitInfo(pre, per, tuple(pts))


Bits = Union[str, Sequence[int]]


def _bits_to_int(bits: Bits) -> tuple[int, int]:
    if isinstance(bits, str):
        if bits and set(bits) - {"0", "1"}:
            raise ValueError(f"not a binary word: {bits!r}")
        return (int(bits, 2) if bits else 0), len(bits)
    value = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"not a binary digit: {b!r}")
        value = 2 * value + b
    return value, len(bits)


def binary_word_to_angle(preperiodic: Bits, repeating: Bits) -> Angle:
    """The angle 0.(preperiodic)(repeating)(repeating)... in base 2."""
    u, lu = _bits_to_int(preperiodic)
    v, lv = _bits_to_int(repeating)
    if lv == 0:
        raise ValueError("repeating block must be non-empty")
    m = (1 << lv) - 1
    return Angle(u * m + v, m << lu)


def sorted_angles(points: Iterable[Angle]) -> list[Angle]:
    pts = list(points)
    if not pts:
        return pts
    lcm = 1
    for p in pts:
        lcm = lcm * p[1] // gcd(lcm, p[1])
    return sorted(pts, key=lambda p: p[0] * (lcm // p[1]))
