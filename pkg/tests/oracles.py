"""Independent brute-force oracles used to derive expected test values.

These deliberately avoid the library's mesh/fan machinery: corner classes via
coordinate matching and union-find, ray tracing via direct line/edge
intersection in polygon charts, shortest corridor paths via exhaustive DP.
"""
from __future__ import annotations

from fractions import Fraction

from flatlam.geom import (cross, dot, seg_seg_intersection, sign, smul, vadd,
                          vsub)
from flatlam.radicals import SqrtSum


def corner_classes(polygons, gluings):
    """Union-find on (polygon, corner) pairs: a gluing identifies the endpoint
    corners of its two edges.  Returns list of (class set, angle multiple)."""
    corners = [(p, i) for p, poly in enumerate(polygons) for i in range(len(poly))]
    parent = {c: c for c in corners}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for (p, e), (q, f), eps, t in gluings:
        np_, nq = len(polygons[p]), len(polygons[q])
        # map carries start of src edge to end of dst edge, end to start
        union((p, e), (q, (f + 1) % nq))
        union((p, (e + 1) % np_), (q, f))

    classes = {}
    for c in corners:
        classes.setdefault(find(c), set()).add(c)

    import math
    out = []
    for cls in classes.values():
        total = 0.0
        for (p, i) in cls:
            poly = polygons[p]
            n = len(poly)
            u = vsub(poly[(i + 1) % n], poly[i])
            v = vsub(poly[(i - 1) % n], poly[i])
            ang = math.atan2(float(cross(u, v)), float(dot(u, v)))
            if ang <= 0:
                ang += 2 * math.pi
            total += ang
        k = round(total / math.pi)
        assert abs(total - k * math.pi) < 1e-9, "oracle: angle not a multiple of pi"
        out.append((cls, k))
    return out


def ray_exit(poly, p, d):
    """First exit of the ray p + t*d (t > 0) from a simple polygon, by direct
    intersection with every edge.  Returns (t, point, edge_index)."""
    n = len(poly)
    best = None
    for e in range(n):
        a, b = poly[e], poly[(e + 1) % n]
        den = cross(d, vsub(b, a))
        if den == 0:
            continue
        t = cross(vsub(a, p), vsub(b, a)) / den
        u = cross(vsub(a, p), d) / den
        if t > 0 and 0 <= u <= 1:
            if best is None or t < best[0]:
                best = (t, vadd(p, smul(t, d)), e)
    return best


def quotient_crossings(surface, segs1, segs2):
    """Count transversal intersection points of two families of chart segments
    (lists of (poly, a, b)).  Only for generic transversal configurations."""
    pts = set()
    for (p1, a1, b1) in segs1:
        for (p2, a2, b2) in segs2:
            if p1 != p2:
                continue
            hit = seg_seg_intersection(a1, b1, a2, b2)
            if hit is not None and hit[0] == "point":
                pts.add((p1, hit[1]))
    return len(pts)


def brute_shortest_corridor(apex, portals, goal):
    """Exact shortest apex->goal path crossing each portal (closed segment) in
    order; DP over anchor choices at portal endpoints with SqrtSum lengths."""
    import itertools

    nodes = [("apex", apex)] + [(i, e) for i, (l, r) in enumerate(portals)
                                for e in (l, r)] + [("goal", goal)]

    def seg_len(a, b):
        return SqrtSum.sqrt((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2)

    def chord_ok(a, b, i0, i1):
        """chord a->b crosses portals i0..i1 (closed)."""
        for i in range(i0, i1 + 1):
            l, r = portals[i]
            if seg_seg_intersection(a, b, l, r) is None:
                return False
        return True

    best: dict = {("apex", apex, -1): (SqrtSum.zero(), [apex])}
    results = []
    frontier = [(-1, apex, SqrtSum.zero(), [apex])]
    while frontier:
        new = []
        for (i, pt, ln, path) in frontier:
            if chord_ok(pt, goal, i + 1, len(portals) - 1):
                results.append((ln + seg_len(pt, goal), path + [goal]))
            for j in range(i + 1, len(portals)):
                for cand in portals[j]:
                    if cand == pt:
                        continue
                    if chord_ok(pt, cand, i + 1, j):
                        new.append((j, cand, ln + seg_len(pt, cand), path + [cand]))
        frontier = new
    assert results, "oracle: no valid path"
    best_pair = results[0]
    for r in results[1:]:
        if r[0].cmp(best_pair[0]) < 0:
            best_pair = r
    return best_pair
