"""Flat geodesic representatives: tightening, cylinders, interlacing.

A free homotopy class given by a crossing word is tightened to either an
isolated closed local geodesic (straight in charts, both side angles >= pi at
every cone passage) or a flat cylinder family, returned with its canonical
mid-height core leaf.  Shortest paths inside developed corridors use the
funnel algorithm (orientation predicates only); combinatorial pivots around
cone points strictly decrease length, and lengths of candidate cycles live in
a discrete set, so the move loop terminates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import TrivialClass
from .geom import (IDENTITY, AffineMap, AnglePos, Vec, cross, dot, is_zero,
                   norm2, rot90, sign, smul, vadd, vneg, vsub)
from .developing import (DevCell, Window, expand_word, parse_word,
                         format_word, check_reduced, fan_continue)
from .surface_core import FlatSurface

ZERO = Fraction(0)
ONE = Fraction(1)


def oriented_primitive(d: Vec) -> Vec:
    """Scale d to a coprime integer vector, preserving orientation."""
    if is_zero(d):
        raise ValueError("zero direction")
    x = d[0].numerator * d[1].denominator
    y = d[1].numerator * d[0].denominator
    g = gcd(abs(x), abs(y))
    return (Fraction(x // g), Fraction(y // g))


# -- funnel: exact shortest path through a portal sequence ---------------------


def _area2(a: Vec, b: Vec, c: Vec) -> Fraction:
    return cross(vsub(b, a), vsub(c, a))


def funnel_path(apex: Vec, portals: list[tuple[Vec, Vec]], goal: Vec):
    """Shortest path from apex to goal crossing each (left, right) portal in
    order.  Returns [(point, portal_index, side)] for the interior anchors;
    side is "L"/"R", portal_index refers to ``portals``."""
    pts = list(portals) + [(goal, goal)]
    anchors = []
    apex_pt = apex
    left, right = apex, apex
    left_i = right_i = -1
    i = 0
    guard = 0
    while i < len(pts):
        guard += 1
        if guard > 6 * (len(pts) + 2) ** 2:
            raise AssertionError("funnel did not terminate")
        l_new, r_new = pts[i]
        # tighten the right chain
        if _area2(apex_pt, right, r_new) <= 0:
            if right == apex_pt or _area2(apex_pt, left, r_new) > 0:
                right, right_i = r_new, i
            else:
                anchors.append((left, left_i, "L"))
                apex_pt = left
                left, right = apex_pt, apex_pt
                i = left_i + 1
                left_i = right_i = left_i
                continue
        if _area2(apex_pt, left, l_new) >= 0:
            if left == apex_pt or _area2(apex_pt, right, l_new) < 0:
                left, left_i = l_new, i
            else:
                anchors.append((right, right_i, "R"))
                apex_pt = right
                left, right = apex_pt, apex_pt
                i = right_i + 1
                left_i = right_i = right_i
                continue
        i += 1
    return anchors


# -- closed geodesics -----------------------------------------------------------


@dataclass(frozen=True)
class GeoSegment:
    tri: int
    a: Vec
    b: Vec


@dataclass(frozen=True)
class ConePassage:
    vclass: int
    angle_multiple: int
    left: AnglePos   # ccw angle from the outgoing to the reversed incoming dir
    right: AnglePos

    @property
    def legal(self) -> bool:
        return self.left.n >= 1 and self.right.n >= 1

    @property
    def flat_left(self) -> bool:
        return self.left.n == 1 and self.left.is_multiple_of_pi()

    @property
    def flat_right(self) -> bool:
        return self.right.n == 1 and self.right.is_multiple_of_pi()


def _complement(k: int, a: AnglePos) -> AnglePos:
    """k*pi - a for a in (0, k*pi)."""
    if a.is_multiple_of_pi():
        return AnglePos(k - a.n, ONE, ZERO)
    return AnglePos(k - a.n - 1, -a.c, a.s)


class ClosedFlatGeodesic:
    """A closed local geodesic as a cyclic sequence of steps.

    steps: ("cell", tri, dev, entry_edge, entry_pt_chart) or
           ("vertex", vclass, (tri,c,dev,dir)_arrival, (tri,c,dev,dir)_departure,
            pos_dev); twist advances the developed picture one period.
    """

    def __init__(self, surface: FlatSurface, steps, twist: AffineMap):
        self.surface = surface
        self.steps = steps
        self.twist = twist
        self._segments = None
        self._canonical = None
        self._passages = None

    def cell_steps(self):
        return [s for s in self.steps if s[0] == "cell"]

    def segments(self) -> list[GeoSegment]:
        """Chart segments per visited cell (zero-length visits dropped)."""
        if self._segments is None:
            segs = []
            cells = self.cell_steps()
            n = len(cells)
            for j in range(n):
                _k, tri, dev, _e, pt = cells[j]
                if j + 1 < n:
                    _k2, _t2, dev2, _e2, pt2 = cells[j + 1]
                    exit_dev = dev2.apply(pt2)
                else:
                    _k2, _t2, dev2, _e2, pt2 = cells[0]
                    exit_dev = self.twist.apply(dev2.apply(pt2))
                a, b = pt, dev.inverse().apply(exit_dev)
                if a != b:
                    segs.append(GeoSegment(tri, a, b))
            self._segments = segs
        return self._segments

    def cone_passages(self) -> list[ConePassage]:
        if self._passages is None:
            out = []
            for s in self.steps:
                if s[0] != "vertex":
                    continue
                _k, vclass, arr, dep, _pt = s
                fan = self.surface.vertex_fan(vclass)
                t_in, c_in, _devi, d_in = arr
                t_out, c_out, _devo, d_out = dep
                p_in = fan.position(t_in, c_in, vneg(d_in))
                p_out = fan.position(t_out, c_out, d_out)
                left = fan.span(p_out, p_in)
                if left.is_zero():
                    left = AnglePos(0, ONE, ZERO)  # backtrack: angle 0, illegal
                out.append(ConePassage(vclass, fan.k, left,
                                       _complement(fan.k, left)))
            self._passages = out
        return self._passages

    def singular_passages(self) -> list[ConePassage]:
        return [p for p in self.cone_passages()
                if self.surface.cone_points[p.vclass].is_singular]

    def is_nonsingular(self) -> bool:
        return not self.singular_passages()

    def chord_length2s(self) -> list[Fraction]:
        return [norm2(vsub(b, a)) for (_p, a, b) in self.quotient_runs()]

    def quotient_runs(self) -> list[tuple[int, Vec, Vec]]:
        """Maximal straight runs (polygon, start, end) in polygon charts."""
        surface = self.surface
        runs = []
        cur = None
        for seg in self.segments():
            poly = surface.mesh.tris[seg.tri].poly
            d = vsub(seg.b, seg.a)
            if cur is not None and cur[0] == poly and cur[2] == seg.a \
                    and cross(cur[3], d) == 0 and dot(cur[3], d) > 0:
                cur = (poly, cur[1], seg.b, cur[3])
            else:
                if cur is not None:
                    runs.append((cur[0], cur[1], cur[2]))
                cur = (poly, seg.a, seg.b, d)
        if cur is not None:
            runs.append((cur[0], cur[1], cur[2]))
        if len(runs) >= 2:
            p0, a0, b0 = runs[0]
            p1, a1, b1 = runs[-1]
            if p0 == p1 and b1 == a0 and \
                    cross(vsub(b1, a1), vsub(b0, a0)) == 0 and \
                    dot(vsub(b1, a1), vsub(b0, a0)) > 0:
                runs = [(p1, a1, b0)] + runs[1:-1]
        return runs

    def canonical(self):
        """Rotation- and orientation-least serialization (unoriented form)."""
        if self._canonical is None:
            runs = self.quotient_runs()
            fwd = list(runs)
            rev = [(p, b, a) for (p, a, b) in reversed(runs)]
            best = None
            for seq in (fwd, rev):
                n = len(seq)
                for r in range(n):
                    cand = tuple(seq[(r + i) % n] for i in range(n))
                    if best is None or cand < best:
                        best = cand
            self._canonical = best
        return self._canonical

    def canonical_id(self) -> str:
        return repr(self.canonical())

    def primitive_period(self) -> int:
        runs = self.canonical()
        n = len(runs)
        for p in range(1, n + 1):
            if n % p == 0 and all(runs[i] == runs[(i + p) % n] for i in range(n)):
                return n // p
        return 1

    def direction_at_start(self) -> Vec:
        seg = self.segments()[0]
        return vsub(seg.b, seg.a)

    def __eq__(self, other):
        return isinstance(other, ClosedFlatGeodesic) and \
            self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"<geodesic runs={len(self.quotient_runs())} " \
               f"twist=({self.twist.eps},{self.twist.t})>"


@dataclass(frozen=True)
class BandPiece:
    tri: int
    u: Vec          # h(x) = dot(u, x) + c, heights within [lo, hi]
    c: Fraction
    lo: Fraction
    hi: Fraction


class CylinderComponent:
    """Maximal flat cylinder: parallel closed leaves swept across a width.

    Heights are measured by the exact transverse functional cross(d, .) with d
    the canonical primitive direction (so ratios of heights are the Lebesgue
    fractions used by measures); ``width`` is the functional span.
    """

    def __init__(self, surface, core: ClosedFlatGeodesic, width: Fraction,
                 core_height: Fraction, circumference2: Fraction,
                 pieces: list[BandPiece], boundaries, wraps: int = 1):
        self.surface = surface
        self.core = core            # canonical mid-height leaf
        self.width = width
        self.core_height = core_height  # = width/2 by construction
        self.circumference2 = circumference2
        self.pieces = pieces
        self.boundaries = boundaries  # (lower, upper) ClosedFlatGeodesic
        self.wraps = wraps

    def leaf(self, s: Fraction) -> ClosedFlatGeodesic:
        """The closed leaf at height s, 0 < s < width."""
        s = Fraction(s)
        if not (0 < s < self.width):
            raise ValueError("interior leaves have 0 < s < width")
        for pc in self.pieces:
            if pc.lo < s < pc.hi:
                tri = self.surface.mesh.tris[pc.tri]
                # solve dot(u, x) + c = s inside the triangle
                a = tri.verts[0]
                for other in (tri.verts[1], tri.verts[2]):
                    den = dot(pc.u, vsub(other, a))
                    if den != 0:
                        t = (s - pc.c - dot(pc.u, a)) / den
                        if 0 <= t <= 1:
                            pt = vadd(a, smul(t, vsub(other, a)))
                            d = rot90(pc.u)
                            return trace_straight_closed(self.surface, pc.tri,
                                                         pt, d)
                        # try edge between verts 1 and 2
                b, cvx = tri.verts[1], tri.verts[2]
                den = dot(pc.u, vsub(cvx, b))
                if den != 0:
                    t = (s - pc.c - dot(pc.u, b)) / den
                    if 0 <= t <= 1:
                        pt = vadd(b, smul(t, vsub(cvx, b)))
                        return trace_straight_closed(self.surface, pc.tri, pt,
                                                     rot90(pc.u))
        raise AssertionError("height not covered by band pieces")

    def canonical_id(self) -> str:
        return "cyl:" + self.core.canonical_id()

    def height_of(self, tri: int, p: Vec):
        """Height of a chart point inside this cylinder, or None."""
        for pc in self.pieces:
            if pc.tri != tri:
                continue
            h = dot(pc.u, p) + pc.c
            if pc.lo <= h <= pc.hi:
                return h
        return None

    def __repr__(self):
        return f"<cylinder width={self.width} circ2={self.circumference2} " \
               f"wraps={self.wraps}>"


# -- straight closed traces ------------------------------------------------------


def _exit_of_ray(tri, p: Vec, d: Vec):
    t_exit = None
    for e in range(3):
        a, b = tri.edge(e)
        n = rot90(vsub(b, a))
        dn = dot(n, d)
        if dn < 0:
            t = dot(n, vsub(a, p)) / dn
            if t_exit is None or t < t_exit:
                t_exit = t
    q = vadd(p, smul(t_exit, d))
    zero = [e for e in range(3)
            if dot(rot90(vsub(tri.edge(e)[1], tri.edge(e)[0])),
                   vsub(q, tri.edge(e)[0])) == 0]
    return t_exit, q, zero


def trace_straight_closed(surface: FlatSurface, tri_idx: int, pt: Vec,
                          d: Vec, max_steps: int = 200000) -> ClosedFlatGeodesic:
    """Trace the straight line through (tri, pt) with direction d until it
    closes up; the line must be a closed nonsingular geodesic (regular vertex
    passages are followed through)."""
    mesh = surface.mesh
    steps = []
    dev = IDENTITY
    tri, p, dd = tri_idx, pt, d
    state0 = None
    for _ in range(max_steps):
        tcur = mesh.tris[tri]
        _t_exit, q, zero = _exit_of_ray(tcur, p, dd)
        if len(zero) >= 2:
            corner = next(c for c in range(3) if tcur.verts[c] == q)
            vclass = tcur.vclass[corner]
            if surface.cone_points[vclass].is_singular:
                raise AssertionError("straight trace hit a singular vertex")
            t2, c2, d2, dev2 = fan_continue(surface, tri, vclass, corner, dd, dev)
            if state0 is not None:
                steps.append(("vertex", vclass, (tri, corner, dev, dd),
                              (t2, c2, dev2, d2), dev.apply(q)))
            tri, p, dd, dev = t2, mesh.tris[t2].verts[c2], d2, dev2
            continue
        e = zero[0]
        t2, e2, m = tcur.adj[e]
        p2 = m.apply(q)
        d2 = m.apply_dir(dd)
        key = (t2, p2, oriented_primitive(d2))
        if state0 is None:
            state0 = key
            dev = IDENTITY
            steps.append(("cell", t2, dev, e2, p2))
        else:
            dev2 = dev.compose(m.inverse())
            if key == state0:
                return ClosedFlatGeodesic(surface, steps, dev2)
            steps.append(("cell", t2, dev2, e2, p2))
            dev = dev2
        tri, p, dd = t2, p2, d2
    raise AssertionError("straight trace did not close")


# -- cyclic tightening state -----------------------------------------------------


def _portal_dev(surface, cell: DevCell) -> tuple[Vec, Vec]:
    tri = surface.mesh.tris[cell.tri]
    a, b = tri.edge(cell.entry_edge)
    return cell.dev.apply(a), cell.dev.apply(b)


def _cells_ext(surface, cells, twist, periods: int):
    out = []
    m = IDENTITY
    for _r in range(periods):
        for c in cells:
            out.append(DevCell(c.tri, m.compose(c.dev), c.entry_edge))
        m = twist.compose(m)
    return out


def _corner_of_anchor(surface, cell: DevCell, side: str) -> int:
    e = cell.entry_edge
    return e if side == "L" else (e + 1) % 3


def _sector_contains(tri, c: int, d: Vec) -> bool:
    r_out = vsub(tri.verts[(c + 1) % 3], tri.verts[c])
    r_in = vsub(tri.verts[(c + 2) % 3], tri.verts[c])
    return cross(r_out, d) >= 0 and cross(d, r_in) >= 0 and \
        not (cross(r_out, d) == 0 and dot(r_out, d) < 0)


def _corner_back(surface, cells, i: int, c: int) -> int | None:
    """Corner at the same vertex in cells[i-1], across cells[i]'s entry portal."""
    mesh = surface.mesh
    e = cells[i].entry_edge
    t_prev, e_prev, _m = mesh.tris[cells[i].tri].adj[e]
    if t_prev != cells[i - 1].tri:
        return None
    if c == e:
        return (e_prev + 1) % 3
    if c == (e + 1) % 3:
        return e_prev
    return None


def _corner_fwd(surface, cells, i: int, c: int) -> int | None:
    """Corner at the same vertex in cells[i+1], across cells[i+1]'s entry portal."""
    mesh = surface.mesh
    e2 = cells[i + 1].entry_edge
    t_cur, e_cur, _m = mesh.tris[cells[i + 1].tri].adj[e2]
    if t_cur != cells[i].tri:
        return None
    if c == e_cur:
        return (e2 + 1) % 3
    if c == (e_cur + 1) % 3:
        return e2
    return None


def _arrival_placement(surface, cells, j: int, side: str, u_dev: Vec):
    """(cell index, corner, chart dir of -u) for the stretch arriving at the
    anchor on cells[j]'s entry portal."""
    c = _corner_of_anchor(surface, cells[j], side)
    i = j
    for _guard in range(len(cells) + 2):
        c_prev = _corner_back(surface, cells, i, c)
        assert c_prev is not None, "arrival walk left the vertex"
        i -= 1
        c = c_prev
        tri = surface.mesh.tris[cells[i].tri]
        d_chart = cells[i].dev.inverse().apply_dir(vneg(u_dev))
        if _sector_contains(tri, c, d_chart):
            return i, c, d_chart
    raise AssertionError("arrival placement not found")


def _departure_placement(surface, cells, j: int, side: str, w_dev: Vec):
    c = _corner_of_anchor(surface, cells[j], side)
    i = j
    for _guard in range(len(cells) + 2):
        tri = surface.mesh.tris[cells[i].tri]
        d_chart = cells[i].dev.inverse().apply_dir(w_dev)
        if _sector_contains(tri, c, d_chart):
            return i, c, d_chart
        c_next = _corner_fwd(surface, cells, i, c)
        assert c_next is not None, "departure walk left the vertex"
        i += 1
        c = c_next
    raise AssertionError("departure placement not found")


def _fan_walk(surface, tri0: int, c0: int, dev0: AffineMap, tri1: int, c1: int,
              direction: str):
    """Walk corners around a vertex ("ccw"/"cw") from (tri0,c0) to (tri1,c1);
    returns (entered DevCells excluding start, final dev at (tri1,c1))."""
    mesh = surface.mesh
    t, c, dev = tri0, c0, dev0
    out = []
    for _guard in range(4 * len(mesh.tris) + 8):
        if (t, c) == (tri1, c1):
            return out, dev
        if direction == "ccw":
            t2, e2, m = mesh.tris[t].adj[(c + 2) % 3]
            c2 = e2
        else:
            t2, e2, m = mesh.tris[t].adj[c]
            c2 = (e2 + 1) % 3
        dev = dev.compose(m.inverse())
        out.append(DevCell(t2, dev, e2))
        t, c = t2, c2
    raise AssertionError("fan walk did not terminate")


class _Cycle:
    def __init__(self, surface, cells, twist, anchors=None):
        self.surface = surface
        self.cells = list(cells)
        self.twist = twist
        self.anchors = anchors or []  # ordered [(cell_idx, side, pos_dev)]

    def portal_ext(self, j: int):
        K = len(self.cells)
        m = IDENTITY
        while j >= K:
            j -= K
            m = self.twist.compose(m)
        L, R = _portal_dev(self.surface, self.cells[j])
        return m.apply(L), m.apply(R)

    def anchor_ext(self, i: int):
        A = len(self.anchors)
        K = len(self.cells)
        r, i0 = divmod(i, A)
        j, side, p = self.anchors[i0]
        m = IDENTITY
        for _ in range(r):
            m = self.twist.compose(m)
        return j + r * K, side, m.apply(p)


def _refunnel(cyc: _Cycle) -> bool:
    """Recompute all chords via the funnel; returns True if anchors changed."""
    A = len(cyc.anchors)
    new = []
    K = len(cyc.cells)
    for i in range(A):
        j1, s1, p1 = cyc.anchor_ext(i)
        j2, s2, p2 = cyc.anchor_ext(i + 1)
        new.append(cyc.anchors[i])
        portals = [cyc.portal_ext(j) for j in range(j1 + 1, j2)]
        for (pt, local, side) in funnel_path(p1, portals, p2):
            if local >= len(portals):
                continue  # goal pseudo-portal
            jg = j1 + 1 + local
            r, jb = divmod(jg, K)
            m = cyc.twist
            pos = pt
            for _ in range(r):
                pos = m.inverse().apply(pos)
            if new and new[-1][2] == pos:
                continue
            new.append((jb, side, pos))
    # normalize rotation: start at the lexicographically least (index, side, pos)
    if new != cyc.anchors:
        k = min(range(len(new)), key=lambda x: new[x][0])
        new = new[k:] + new[:k]
        if new != cyc.anchors:
            cyc.anchors = new
            return True
    return False


def _anchor_geometry(cyc: _Cycle, i: int):
    """Placements and side angles at anchor i (indices into tripled cells)."""
    surface = cyc.surface
    A = len(cyc.anchors)
    K = len(cyc.cells)
    ext = _cells_ext(surface, cyc.cells, cyc.twist, 3)
    jx, sx, px = cyc.anchor_ext(i + A)  # middle-period copy
    jp, sp, pp = cyc.anchor_ext(i + A - 1)
    jn, sn, pn = cyc.anchor_ext(i + A + 1)
    u = vsub(px, pp)
    w = vsub(pn, px)
    if is_zero(u) or is_zero(w):
        return None  # degenerate chord
    i_in, c_in, din = _arrival_placement(surface, ext, jx, sx, u)
    i_out, c_out, dout = _departure_placement(surface, ext, jx, sx, w)
    tri_in = ext[i_in].tri
    tri_out = ext[i_out].tri
    vclass = surface.mesh.tris[tri_in].vclass[c_in]
    fan = surface.vertex_fan(vclass)
    p_in = fan.position(tri_in, c_in, din)      # din is chart dir of -u
    p_out = fan.position(tri_out, c_out, dout)  # chart dir of w
    left = fan.span(p_out, p_in)
    right = _complement(fan.k, left)
    return {"ext": ext, "jx": jx, "jp": jp, "jn": jn, "pp": pp, "px": px,
            "pn": pn, "i_in": i_in, "c_in": c_in, "i_out": i_out,
            "c_out": c_out, "vclass": vclass, "left": left, "right": right,
            "u": u, "w": w}


def _pivot(cyc: _Cycle, i: int, geo: dict) -> _Cycle:
    """Re-route the cycle around anchor i on its short side."""
    surface = cyc.surface
    K = len(cyc.cells)
    A = len(cyc.anchors)
    ext = geo["ext"]
    i_in, c_in = geo["i_in"], geo["c_in"]
    i_out, c_out = geo["i_out"], geo["c_out"]
    side_dir = "cw" if geo["left"].n < 1 else "ccw"
    arc, dev_final = _fan_walk(surface, ext[i_in].tri, c_in, ext[i_in].dev,
                               ext[i_out].tri, c_out, side_dir)
    if not arc:
        raise AssertionError("empty pivot arc")
    # last walked cell is the departure cell re-entered across a fan ray
    new_entry = arc[-1].entry_edge
    rho = dev_final.compose(ext[i_out].dev.inverse())
    arc = arc[:-1]
    delta = len(arc) - (i_out - i_in - 1)

    def adj_cell(c: DevCell) -> DevCell:
        return DevCell(c.tri, rho.compose(c.dev), c.entry_edge)

    tail = [adj_cell(c) for c in ext[i_out:]]
    tail[0] = DevCell(tail[0].tri, tail[0].dev, new_entry)
    spliced = ext[:i_in + 1] + arc + tail

    def new_index(old: int) -> int:
        assert old <= i_in or old >= i_out
        return old if old <= i_in else old + delta

    def new_pos(old_idx: int, p: Vec) -> Vec:
        return p if old_idx <= i_in else rho.apply(p)

    if A >= 2:
        p1 = geo["jp"]
        p2 = p1 + K + delta  # next copy of the prev anchor, post-splice
        assert p1 <= i_in and p1 + K >= i_out
        start = new_index(p1)
        end = new_index(p1 + K)
        new_cells = spliced[start:end]
        d1 = spliced[start].dev
        d2 = spliced[end].dev
        assert spliced[end].tri == spliced[start].tri
        twist = d2.compose(d1.inverse())
        # surviving anchors with a copy in [p1, p1+K)
        new_anchors = []
        for k in range(A):
            if (k - (i % A)) % A == 0:
                continue
            # find this anchor's copy in the window
            for rep in range(3):
                jj, ss, pz = cyc.anchor_ext(k + rep * A)
                if p1 <= jj < p1 + K and not (i_in < jj < i_out):
                    new_anchors.append((new_index(jj) - start, ss,
                                        new_pos(jj, pz)))
                    break
            else:
                raise AssertionError("anchor copy not found in cut window")
        new_anchors.sort(key=lambda a: a[0])
        return _Cycle(surface, new_cells, twist, new_anchors)
    # A == 1: the cycle loses its only anchor
    if K + delta <= 0:
        raise TrivialClass("curve collapses into a vertex star")
    start = i_in + 1  # first arc cell (post-splice index)
    jj = i_in + K     # next-period copy of the arrival cell
    d1 = spliced[new_index(i_in)].dev
    d2 = spliced[new_index(jj)].dev
    twist = d2.compose(d1.inverse())
    new_cells = arc + spliced[new_index(i_out):new_index(jj) + 1][:-0 or None]
    new_cells = spliced[start:start + len(arc)] + \
        spliced[new_index(i_out):new_index(i_in + K) + 1 - 1 + 1]
    new_cells = new_cells[:K + delta]
    assert len(new_cells) == K + delta
    return _Cycle(surface, new_cells, twist, [])
