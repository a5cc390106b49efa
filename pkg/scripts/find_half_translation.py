#!/usr/bin/env python3
"""Search gluing patterns on unit squares for a genus-2 half-translation surface.

Looks for a valid closed surface (all cone angles >= 2*pi, chi < 0) whose
-Id gluings are essential (no per-polygon sign change turns them all into
translations).  Prints the first few hits as build_surface argument literals.
"""
from __future__ import annotations

import itertools
import sys
from fractions import Fraction as F

sys.path.insert(0, "src")

from flatlam.errors import FlatLamError
from flatlam.surface_core import build_surface


def square(_):
    return [(F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))]


def pair_map(kind_a, kind_b):
    """Map for gluing edge kind_a of one square onto edge kind_b of another.

    Kinds: 0 bottom, 1 right, 2 top, 3 left.  Returns (eps, t) or None."""
    # translation pairs (antiparallel vectors)
    trans = {(0, 2): (1, (F(0), F(1))), (2, 0): (1, (F(0), F(-1))),
             (1, 3): (1, (F(-1), F(0))), (3, 1): (1, (F(1), F(0)))}
    flips = {(0, 0): (-1, (F(1), F(0))), (2, 2): (-1, (F(1), F(2))),
             (1, 1): (-1, (F(2), F(1))), (3, 3): (-1, (F(0), F(1)))}
    return trans.get((kind_a, kind_b)) or flips.get((kind_a, kind_b))


def matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for m in matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def essential_flips(n_polys, gluings):
    """True if no per-polygon sign assignment makes every eps equal +1."""
    for signs in itertools.product((1, -1), repeat=n_polys):
        if all(signs[p] * eps * signs[q] == 1
               for ((p, _e), (q, _f), eps, _t) in gluings):
            return False
    return True


def candidates(n):
    horiz = [(p, k) for p in range(n) for k in (0, 2)]
    vert = [(p, k) for p in range(n) for k in (1, 3)]
    for hm in matchings(horiz):
        for vm in matchings(vert):
            gl = []
            ok = True
            for (p, ka), (q, kb) in hm + vm:
                m = pair_map(ka, kb)
                if m is None:
                    m = pair_map(kb, ka)
                    if m is None:
                        ok = False
                        break
                    p, ka, q, kb = q, kb, p, ka
                gl.append(((p, ka), (q, kb), m[0], m[1]))
            if ok:
                yield gl


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    want = int(sys.argv[2]) if len(sys.argv) > 2 else 5
    polys = [square(i) for i in range(n)]
    hits = 0
    tried = 0
    for gl in candidates(n):
        tried += 1
        if not any(eps == -1 for (_a, _b, eps, _t) in gl):
            continue
        if not essential_flips(n, gl):
            continue
        try:
            s = build_surface(polys, gl)
        except FlatLamError:
            continue
        hits += 1
        ks = sorted(cp.angle_multiple for cp in s.cone_points)
        print(f"# hit {hits}: chi={s.euler_characteristic} cone k={ks}")
        print("gl =", gl)
        if hits >= want:
            break
    print(f"# tried {tried} candidates", file=sys.stderr)


if __name__ == "__main__":
    main()
