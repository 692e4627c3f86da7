"""Independent reference implementations used only by the tests.

Everything here is exact (fractions.Fraction, or integer numerators over a common
denominator where speed matters), works by direct iteration and exhaustive search, and
imports nothing from the package: no flat-spot map, no Sturmian words, no horseshoe
module.  Run as a script to print the step-by-step
classification of the verdict fixtures.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from math import gcd

HALF = Fraction(1, 2)


def sig(x: Fraction, n: int = 1) -> Fraction:
    for _ in range(n):
        x = (2 * x) % 1
    return x


def orbit_split(x: Fraction, step=sig):
    """(points, index where the cycle starts) by direct iteration with a seen-dict."""
    seen = {}
    pts = []
    while x not in seen:
        seen[x] = len(pts)
        pts.append(x)
        x = step(x)
    return pts, seen[x]


def is_periodic(x: Fraction) -> bool:
    return orbit_split(x)[1] == 0


def in_closed_arc(x, a, b) -> bool:
    # counterclockwise closed arc [a, b]
    return (x - a) % 1 <= (b - a) % 1


def rotation_of(orbit) -> Fraction | None:
    pts = sorted(orbit)
    k = len(pts)
    pos = {p: i for i, p in enumerate(pts)}
    shifts = {(pos[sig(p)] - pos[p]) % k for p in pts}
    if len(shifts) != 1:
        return None
    m = shifts.pop()
    if gcd(m, k) != 1:
        return None
    return Fraction(m, k)


def periodic_orbits(k: int):
    """All sigma-orbits of exact period k, by exhaustive enumeration over 2^k - 1."""
    m = 2**k - 1
    done = set()
    out = []
    for a in range(m):
        x = Fraction(a, m)
        if x in done:
            continue
        pts, start = orbit_split(x)
        done.update(pts)
        if start == 0 and len(pts) == k:
            out.append(frozenset(pts))
    return out


def rotational_orbits(k: int):
    return {rotation_of(o): o for o in periodic_orbits(k) if rotation_of(o) is not None}


def minimal_rotational_set(theta: Fraction, kmax: int):
    """Rotational orbits with k <= kmax inside the closed semicircle at theta (exhaustive)."""
    found = []
    for k in range(1, kmax + 1):
        for o in periodic_orbits(k):
            if rotation_of(o) is None:
                continue
            if all(in_closed_arc(p, theta, theta + HALF) for p in o):
                found.append(o)
    return found


def horseshoe(A):
    pts = sorted(A)
    k = len(pts)
    gaps = [(pts[i], pts[(i + 1) % k]) for i in range(k)]
    lo, hi = min(gaps, key=lambda g: (g[1] - g[0]) % 1)
    cands = [((lo / 2), (hi / 2)), ((lo / 2 + HALF) % 1, (hi / 2 + HALF) % 1)]
    # I ends on A, I' starts on A
    if cands[0][1] in A:
        I, Ip = cands
    else:
        Ip, I = cands
    assert I[1] in A and Ip[0] in A
    return k, I, Ip


def dinf_digits(h, x):
    k, I, Ip = h

    def step(y):
        return sig(y, k)

    pts, start = orbit_split(x, step)
    digits = []
    for y in pts:
        if in_closed_arc(y, *I):
            digits.append(0)
        elif in_closed_arc(y, *Ip):
            digits.append(1)
        else:
            return None
    return digits, start


def dinf_point(h, pre, rep) -> Fraction:
    """The point of D_inf with sigma^k-itinerary pre(rep)^inf, built from inverse branches.

    In the coordinate u = distance from alpha' along the major gap [alpha', beta], the
    inverse of sigma^k on I is u -> (W - |I|) + u/2^k and on I' it is u -> u/2^k.
    """
    k, I, Ip = h
    alpha_p, beta = Ip[0], I[1]
    W = (beta - alpha_p) % 1
    width = (I[1] - I[0]) % 1
    scale = Fraction(1, 2**k)
    offset = {0: W - width, 1: Fraction(0)}
    # the repeating block as one affine map u -> a u + b, then its fixed point
    a, b = Fraction(1), Fraction(0)
    for d in reversed(rep):
        a, b = a * scale, offset[d] + scale * b
    u = b / (1 - a)
    for d in reversed(pre):
        u = offset[d] + scale * u
    return (alpha_p + u) % 1


def binary_value(digits, start) -> Fraction:
    pre, rep = digits[:start], digits[start:]
    val = Fraction(0)
    for i, d in enumerate(pre):
        val += Fraction(d, 2 ** (i + 1))
    r = sum(Fraction(d, 2 ** (i + 1)) for i, d in enumerate(rep))
    # geometric tail: r / (1 - 2^-len(rep)), shifted past the preperiodic part
    tail = r / (1 - Fraction(1, 2 ** len(rep)))
    return (val + tail / 2 ** len(pre)) % 1


def classify(theta: Fraction, log=None):
    """Step-by-step classification; returns (kind, depth, stage list)."""
    say = log or (lambda *_: None)
    theta = theta % 1
    t = theta if theta < HALF else theta - HALF
    if not is_periodic(sig(t)):
        say(f"sigma({t}) = {sig(t)} is not periodic -> non_degenerate_aperiodic")
        return "non_degenerate_aperiodic", None, []
    n = len(orbit_split(sig(t))[0])
    stages = []
    while True:
        cands = minimal_rotational_set(t, n)
        assert len(cands) == 1, (t, cands)
        A = cands[0]
        rho = rotation_of(A)
        say(f"stage {len(stages)}: theta={t}, N={n}, A={sorted(A)}, rho={rho}")
        if t in A or (t + HALF) % 1 in A:
            say("  theta or theta' in A -> basic rotational")
            stages.append((t, n, rho, None))
            return "degenerate", len(stages), stages
        h = horseshoe(A)
        res = dinf_digits(h, t)
        if res is None:
            say(f"  sigma^{h[0]}-orbit of theta leaves D -> basic non-rotational")
            stages.append((t, n, rho, None))
            return "non_degenerate", len(stages), stages
        nxt = binary_value(*res)
        if nxt >= HALF:
            nxt -= HALF
        say(f"  itinerary {res}, prune -> {nxt}")
        stages.append((t, n, rho, nxt))
        assert n % h[0] == 0
        t, n = nxt, n // h[0]


def block_structure(P, rho: Fraction) -> bool:
    """Direct check: can the periodic orbit P be cut into k circular blocks that doubling
    permutes like the rotation by rho = m/k?"""
    m, k = rho.numerator, rho.denominator
    N = len(P)
    if N % k:
        return False
    q = max(x.denominator for x in P)
    pts = sorted(int(x * q) for x in P)
    pos = {a: i for i, a in enumerate(pts)}
    image = [pos[(2 * a) % q] for a in pts]
    b = N // k
    for s in range(b):
        # block of sorted position i when the cut starts at position s
        if all(
            (((image[i] - s) % N) // b - ((i - s) % N) // b - m) % k == 0 for i in range(N)
        ):
            return True
    return False


def semicircle_orbits(theta: Fraction, kmax: int):
    """Every periodic orbit of period <= kmax contained in the closed semicircle
    [theta, theta + 1/2], by refining the set of points whose first n images stay there.

    Intervals are lifted to [theta, theta + 1/2] and held as integer numerators over
    D = q 2^(n+1), which doubles at every refinement step.
    """
    p, q = theta.numerator, theta.denominator
    D = 2 * q
    lo0 = p * 2  # theta * D
    intervals = [(lo0, lo0 + q)]  # X_0 = S
    found = []
    seen = set()
    for k in range(1, kmax + 1):
        # candidates with period dividing k inside X_{k-1}
        M = 2**k - 1
        for a, b in intervals:
            c = -((-a * M) // D)
            while c * D <= b * M:
                x = Fraction(c % M, M)
                if x not in seen:
                    pts, start = orbit_split(x)
                    if start == 0 and len(pts) == k:
                        seen.update(pts)
                        found.append(frozenset(pts))
                c += 1
        if k == kmax:
            break
        # X_k: points of S whose image lies in X_{k-1}
        D2 = 2 * D
        lo, hi = 2 * lo0, 2 * lo0 + D
        nxt = []
        for a, b in intervals:
            j = -((-(lo - b)) // D)
            while a + j * D <= hi:
                s, e = max(a + j * D, lo), min(b + j * D, hi)
                if s <= e:
                    nxt.append((s, e))
                j += 1
        intervals = sorted(nxt)
        D, lo0 = D2, lo
    return found


def preimages(t: Fraction, i: int):
    pts = [t]
    for _ in range(i):
        pts = [y for x in pts for y in (x / 2, x / 2 + HALF)]
    return pts


def linked(u, v) -> bool:
    a, b = sorted(u)
    c, d = v
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def linked_pairs(ends) -> int:
    """Number of crossing pairs among chords given as (x, y) fractions; numpy all-pairs."""
    import numpy as np

    if not ends:
        return 0
    den = 1
    for pair in ends:
        for x in pair:
            den = den * x.denominator // gcd(den, x.denominator)
    assert den < 2**62
    E = np.array([sorted(int(x * den) for x in pair) for pair in ends], dtype=np.int64)
    a, b = E[:, 0][:, None], E[:, 1][:, None]
    c, d = E[:, 0][None, :], E[:, 1][None, :]
    distinct = (a != c) & (a != d) & (b != c) & (b != d)
    c_in = (a < c) & (c < b)
    d_in = (a < d) & (d < b)
    crossing = distinct & (c_in != d_in)
    return int(np.triu(crossing, 1).sum())


if __name__ == "__main__":
    for text in sys.argv[1:] or ["1/4", "0", "1/3", "1/7", "3/7", "1/6", "2/7", "1/5", "2/5"]:
        print(f"== {text}")
        kind, depth, _ = classify(Fraction(text), log=print)
        print(f"   => {kind}, depth {depth}")
