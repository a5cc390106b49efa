"""Exact arithmetic with sums of square roots of nonnegative rationals.

A length of a polyline with rational squared segment lengths is
sum_i sqrt(q_i).  Canonicalizing each sqrt(q) as r*sqrt(d) with d squarefree
makes equality a syntactic check, and a nonzero canonical combination
sum c_i sqrt(d_i) (distinct squarefree d_i) is never zero, so sign evaluation
by interval refinement terminates.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = a^2 * d with d squarefree; returns (a, d).  n >= 1."""
    a, d = 1, 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            a *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return a, d


def sqrt_canonical(q: Fraction) -> tuple[Fraction, int]:
    """sqrt(q) = r * sqrt(d) with d squarefree integer, r rational >= 0."""
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return Fraction(0), 1
    num, den = q.numerator, q.denominator
    a1, d1 = _squarefree_split(num)
    a2, d2 = _squarefree_split(den)
    # sqrt(num/den) = sqrt(num*den)/den
    from math import gcd
    g = gcd(d1, d2)
    d = (d1 // g) * (d2 // g)
    r = Fraction(a1 * a2 * g, den)
    return r, d


class SqrtSum:
    """Immutable sum of c_i * sqrt(d_i), d_i distinct squarefree positive ints."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction]):
        self.terms = {d: c for d, c in sorted(terms.items()) if c != 0}

    @staticmethod
    def zero() -> "SqrtSum":
        return SqrtSum({})

    @staticmethod
    def sqrt(q: Fraction) -> "SqrtSum":
        r, d = sqrt_canonical(Fraction(q))
        return SqrtSum({d: r} if r else {})

    @staticmethod
    def length_of(length2s) -> "SqrtSum":
        total: dict[int, Fraction] = {}
        for q in length2s:
            r, d = sqrt_canonical(Fraction(q))
            if r:
                total[d] = total.get(d, Fraction(0)) + r
        return SqrtSum(total)

    def __add__(self, other: "SqrtSum") -> "SqrtSum":
        t = dict(self.terms)
        for d, c in other.terms.items():
            t[d] = t.get(d, Fraction(0)) + c
        return SqrtSum(t)

    def __sub__(self, other: "SqrtSum") -> "SqrtSum":
        t = dict(self.terms)
        for d, c in other.terms.items():
            t[d] = t.get(d, Fraction(0)) - c
        return SqrtSum(t)

    def is_zero(self) -> bool:
        return not self.terms

    def sign(self) -> int:
        """Exact sign; terminates because a nonzero canonical sum is nonzero."""
        if not self.terms:
            return 0
        # interval arithmetic at increasing precision
        bits = 64
        while True:
            lo_total = Fraction(0)
            hi_total = Fraction(0)
            scale = 1 << bits
            for d, c in self.terms.items():
                # bound sqrt(d) in [s/scale, (s+1)/scale]
                s = isqrt(d * scale * scale)
                lo, hi = Fraction(s, scale), Fraction(s + 1, scale)
                if c >= 0:
                    lo_total += c * lo
                    hi_total += c * hi
                else:
                    lo_total += c * hi
                    hi_total += c * lo
            if lo_total > 0:
                return 1
            if hi_total < 0:
                return -1
            bits *= 2

    def cmp(self, other: "SqrtSum") -> int:
        return (self - other).sign()

    def __eq__(self, other):
        return isinstance(other, SqrtSum) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def approx(self) -> float:
        from math import sqrt
        return sum(float(c) * sqrt(d) for d, c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "SqrtSum(0)"
        return "SqrtSum(" + " + ".join(f"{c}*sqrt({d})" for d, c in self.terms.items()) + ")"
