"""Exact rational plane geometry: vectors, predicates, affine maps, angle bookkeeping.

All coordinates are ``fractions.Fraction``; every predicate is an exact sign
computation.  Angles are never stored as reals: an :class:`AnglePos` holds an
integer count of half-turns plus an unnormalized (cos, sin) pair for the
fractional part in [0, pi).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Vec = tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def parse_frac(s: str) -> Fraction:
    """Parse "num/den" (or plain integer) strings."""
    return Fraction(str(s).strip())


def fmt_frac(x: Fraction) -> str:
    """Serialize as "num/den", denominator always present."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def vec(x, y) -> Vec:
    return (frac(x), frac(y))


def vadd(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def vsub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def vneg(a: Vec) -> Vec:
    return (-a[0], -a[1])


def smul(k: Fraction, a: Vec) -> Vec:
    return (k * a[0], k * a[1])


def dot(a: Vec, b: Vec) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def cross(a: Vec, b: Vec) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def norm2(a: Vec) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def rot90(a: Vec) -> Vec:
    return (-a[1], a[0])


def is_zero(a: Vec) -> bool:
    return a[0] == 0 and a[1] == 0


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def orient(a: Vec, b: Vec, c: Vec) -> int:
    """Sign of the signed area of triangle abc (+1 = ccw)."""
    return sign(cross(vsub(b, a), vsub(c, a)))


def collinear(a: Vec, b: Vec, c: Vec) -> bool:
    return orient(a, b, c) == 0


def on_segment(p: Vec, a: Vec, b: Vec) -> bool:
    """p lies on the closed segment [a, b] (a != b not required)."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def primitive_direction(d: Vec) -> Vec:
    """Canonical representative of the unoriented line direction of d.

    Scaled to a coprime integer vector; sign fixed so the first nonzero
    coordinate is positive.
    """
    if is_zero(d):
        raise ValueError("zero direction")
    from math import gcd
    x = d[0].numerator * d[1].denominator
    y = d[1].numerator * d[0].denominator
    g = gcd(abs(x), abs(y))
    x //= g
    y //= g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return (Fraction(x), Fraction(y))


def seg_seg_intersection(p1: Vec, p2: Vec, q1: Vec, q2: Vec):
    """Exact intersection of closed segments [p1,p2] and [q1,q2].

    Returns None, ("point", pt), or ("overlap", a, b) with [a, b] the shared
    sub-segment (a != b).  Collinear single-point touches report "point".
    """
    d1 = vsub(p2, p1)
    d2 = vsub(q2, q1)
    den = cross(d1, d2)
    if den != 0:
        t = cross(vsub(q1, p1), d2) / den
        u = cross(vsub(q1, p1), d1) / den
        if 0 <= t <= 1 and 0 <= u <= 1:
            return ("point", vadd(p1, smul(t, d1)))
        return None
    # parallel
    if orient(p1, p2, q1) != 0:
        return None
    # collinear: project on the dominant axis of d1 (or d2 if p degenerate)
    axis_dir = d1 if not is_zero(d1) else d2
    if is_zero(axis_dir):
        return ("point", p1) if p1 == q1 else None
    key = (lambda v: dot(v, axis_dir))
    lo1, hi1 = sorted((p1, p2), key=key)
    lo2, hi2 = sorted((q1, q2), key=key)
    lo = max(lo1, lo2, key=key)
    hi = min(hi1, hi2, key=key)
    c = sign(key(hi) - key(lo))
    if c < 0:
        return None
    if c == 0:
        return ("point", lo)
    return ("overlap", lo, hi)


def point_in_polygon(p: Vec, poly: list[Vec]) -> int:
    """Exact location of p w.r.t. a simple polygon: 1 inside, 0 on boundary, -1 outside."""
    n = len(poly)
    for i in range(n):
        if on_segment(p, poly[i], poly[(i + 1) % n]):
            return 0
    # crossing number with exact handling of vertex-level ties:
    # count crossings of the upward ray, using the half-open rule on y.
    inside = False
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if (a[1] > p[1]) != (b[1] > p[1]):
            # x coordinate of edge at height p.y
            t = (p[1] - a[1]) / (b[1] - a[1])
            xi = a[0] + t * (b[0] - a[0])
            if xi > p[0]:
                inside = not inside
    return 1 if inside else -1


def polygon_area2(poly: list[Vec]) -> Fraction:
    """Twice the signed area."""
    s = ZERO
    n = len(poly)
    for i in range(n):
        s += cross(poly[i], poly[(i + 1) % n])
    return s


def polygon_is_simple(poly: list[Vec]) -> bool:
    n = len(poly)
    if len(set(poly)) != n:
        return False
    for i in range(n):
        a1, a2 = poly[i], poly[(i + 1) % n]
        if a1 == a2:
            return False
        for j in range(i + 1, n):
            b1, b2 = poly[j], poly[(j + 1) % n]
            hit = seg_seg_intersection(a1, a2, b1, b2)
            if hit is None:
                continue
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if hit[0] == "overlap":
                return False
            pt = hit[1]
            if adjacent:
                shared = a2 if j == i + 1 else a1
                if pt != shared:
                    return False
            else:
                return False
    return True


@dataclass(frozen=True)
class AffineMap:
    """z -> eps*z + t with eps in {+1, -1}; the only isometries we need."""

    eps: int
    t: Vec

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +-1")

    def apply(self, p: Vec) -> Vec:
        if self.eps == 1:
            return (p[0] + self.t[0], p[1] + self.t[1])
        return (self.t[0] - p[0], self.t[1] - p[1])

    def apply_dir(self, d: Vec) -> Vec:
        return d if self.eps == 1 else vneg(d)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self o other: apply ``other`` first."""
        return AffineMap(self.eps * other.eps,
                         vadd(self.t, smul(Fraction(self.eps), other.t)))

    def inverse(self) -> "AffineMap":
        e = Fraction(self.eps)
        return AffineMap(self.eps, (-e * self.t[0], -e * self.t[1]))

    def is_identity(self) -> bool:
        return self.eps == 1 and is_zero(self.t)


IDENTITY = AffineMap(1, (ZERO, ZERO))


class AnglePos:
    """An exact angle n*pi + f with f in [0, pi).

    The fractional part is an unnormalized pair (c, s) ~ (cos f, sin f) up to a
    positive scale, with s > 0, or (c > 0, s == 0) for f = 0.  Supports exact
    addition of corner contributions, subtraction, and comparison.
    """

    __slots__ = ("n", "c", "s")

    def __init__(self, n: int, c: Fraction, s: Fraction):
        if s < 0 or (s == 0 and c <= 0):
            raise ValueError("fractional pair not normalized")
        self.n = n
        self.c = c
        self.s = s

    @staticmethod
    def zero() -> "AnglePos":
        return AnglePos(0, ONE, ZERO)

    @staticmethod
    def from_pair(n: int, c: Fraction, s: Fraction) -> "AnglePos":
        """Normalize n*pi + angle_of(c, s) where angle_of in (-pi, pi]."""
        if s == 0 and c == 0:
            raise ValueError("zero pair")
        if s > 0:
            return AnglePos(n, c, s)
        if s == 0:
            if c > 0:
                return AnglePos(n, c, s)
            return AnglePos(n + 1, -c, ZERO)  # angle pi
        return AnglePos(n - 1, -c, -s)  # angle in (-pi, 0)

    def add_contrib(self, c2: Fraction, s2: Fraction) -> "AnglePos":
        """Add an angle in [0, pi) given by pair (c2, s2) with s2 >= 0 (s2==0 => c2>0),
        or exactly pi given by (c2 < 0, s2 == 0)."""
        if s2 < 0:
            raise ValueError("contribution must be in [0, pi]")
        if s2 == 0 and c2 < 0:  # exactly pi
            return AnglePos(self.n + 1, self.c, self.s)
        nc = self.c * c2 - self.s * s2
        ns = self.c * s2 + self.s * c2
        # f1, f2 in [0, pi): sum in [0, 2pi)
        if ns > 0:
            return AnglePos(self.n, nc, ns)
        if ns == 0:
            if nc > 0:  # sum == 0
                return AnglePos(self.n, nc, ns)
            return AnglePos(self.n + 1, ONE, ZERO)  # sum == pi
        return AnglePos(self.n + 1, -nc, -ns)  # sum in (pi, 2pi)

    def add(self, other: "AnglePos") -> "AnglePos":
        r = self.add_contrib(other.c, other.s)
        return AnglePos(r.n + other.n, r.c, r.s)

    def sub(self, other: "AnglePos") -> "AnglePos":
        """self - other as an AnglePos (n may be negative)."""
        nc = self.c * other.c + self.s * other.s
        ns = self.s * other.c - self.c * other.s
        base = self.n - other.n
        if ns > 0:
            return AnglePos(base, nc, ns)
        if ns == 0:
            if nc > 0:
                return AnglePos(base, nc, ns)
            raise AssertionError("|f1-f2| = pi impossible")
        return AnglePos(base - 1, -nc, -ns)

    def mod_half_turns(self, k: int) -> "AnglePos":
        return AnglePos(self.n % k, self.c, self.s)

    def cmp(self, other: "AnglePos") -> int:
        if self.n != other.n:
            return 1 if self.n > other.n else -1
        cr = self.s * other.c - self.c * other.s  # sin(f1 - f2) sign
        return sign(cr)

    def is_zero(self) -> bool:
        return self.n == 0 and self.s == 0

    def is_multiple_of_pi(self) -> bool:
        return self.s == 0

    def __repr__(self):
        return f"AnglePos({self.n}, {self.c}, {self.s})"

    def approx(self) -> float:
        import math
        return self.n * math.pi + math.atan2(float(self.s), float(self.c))


def ccw_corner_contrib(u: Vec, v: Vec) -> tuple[int, Fraction, Fraction]:
    """The ccw angle from direction u to direction v, in (0, 2*pi), as
    (half_turns, c, s) with the fractional remainder in [0, pi) as a pair.

    Raises on zero angle (parallel same direction).
    """
    c = dot(u, v)
    s = cross(u, v)
    if s > 0:
        return (0, c, s)
    if s == 0:
        if c > 0:
            raise ValueError("zero angle")
        return (1, ONE, ZERO)  # exactly pi
    return (1, -c, -s)  # pi + angle_of(-c,-s) in (pi, 2pi)
