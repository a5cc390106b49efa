"""Half-translation surfaces from rational polygons with +-Id edge gluings.

Validation builds an internal triangulated mesh (ear clipping, no extra
vertices) with per-vertex-class fans carrying exact cumulative angles; all
later geometry (tracing, tightening, crossings) runs on the mesh.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (Disconnected, EulerCharacteristic, FormatError,
                     GluingMismatch, InvalidPolygon, NonAdmissibleAngle)
from .geom import (IDENTITY, AffineMap, AnglePos, Vec, ccw_corner_contrib,
                   cross, dot, fmt_frac, orient, parse_frac, point_in_polygon,
                   polygon_area2, polygon_is_simple, seg_seg_intersection,
                   vadd, vneg, vsub)


@dataclass(frozen=True)
class Gluing:
    src: tuple[int, int]  # (polygon, edge)
    dst: tuple[int, int]
    map: AffineMap  # chart(src polygon) -> chart(dst polygon)


@dataclass(frozen=True)
class ConePoint:
    index: int
    corner_class: frozenset  # of (polygon, corner) pairs
    angle_multiple: int  # total angle = k * pi

    @property
    def is_singular(self) -> bool:
        return self.angle_multiple != 2


class Tri:
    """One triangle of the mesh, in its polygon's chart, ccw."""

    __slots__ = ("index", "poly", "verts", "vidx", "adj", "edge_label", "vclass")

    def __init__(self, index: int, poly: int, verts: tuple[Vec, Vec, Vec],
                 vidx: tuple[int, int, int]):
        self.index = index
        self.poly = poly
        self.verts = verts
        self.vidx = vidx  # vertex indices within the polygon
        self.adj = [None, None, None]  # (tri_idx, edge_idx, AffineMap to other chart)
        self.edge_label = [None, None, None]  # ("internal",) or ("gluing", gidx, +1|-1)
        self.vclass = [None, None, None]

    def edge(self, e: int) -> tuple[Vec, Vec]:
        return (self.verts[e], self.verts[(e + 1) % 3])


class Fan:
    """Cyclic ccw corner fan around one vertex class, with exact angles."""

    def __init__(self, vclass: int, corners: list[tuple[int, int]],
                 starts: list[AnglePos], k: int, mesh: "Mesh"):
        self.vclass = vclass
        self.corners = corners
        self.starts = starts
        self.k = k
        self._mesh = mesh
        self._index = {c: i for i, c in enumerate(corners)}

    def corner_rays(self, i: int) -> tuple[Vec, Vec]:
        t, c = self.corners[i]
        tri = self._mesh.tris[t]
        r_out = vsub(tri.verts[(c + 1) % 3], tri.verts[c])
        r_in = vsub(tri.verts[(c + 2) % 3], tri.verts[c])
        return r_out, r_in

    def position(self, tri_idx: int, c: int, d: Vec) -> AnglePos:
        """Angular position of direction d (based at the vertex) inside corner (tri, c)."""
        i = self._index[(tri_idx, c)]
        r_out, r_in = self.corner_rays(i)
        s = cross(r_out, d)
        if s < 0 or cross(d, r_in) < 0:
            raise ValueError("direction outside corner sector")
        co = dot(r_out, d)
        if s == 0 and co <= 0:
            raise ValueError("degenerate direction")
        return self.starts[i].add_contrib(co, s).mod_half_turns(self.k)

    def span(self, a: AnglePos, b: AnglePos) -> AnglePos:
        """ccw angle from a to b, in [0, k*pi)."""
        return b.sub(a).mod_half_turns(self.k)

    def direction_at(self, pos: AnglePos) -> tuple[int, int, Vec]:
        """Corner (tri, c) and chart direction realizing angular position pos."""
        pos = pos.mod_half_turns(self.k)
        for i in range(len(self.corners)):
            start = self.starts[i]
            off = pos.sub(start).mod_half_turns(self.k)
            t, c = self.corners[i]
            tri = self._mesh.tris[t]
            r_out = vsub(tri.verts[(c + 1) % 3], tri.verts[c])
            r_in = vsub(tri.verts[(c + 2) % 3], tri.verts[c])
            theta = AnglePos.zero().add_contrib(dot(r_out, r_in), cross(r_out, r_in))
            if off.cmp(theta) < 0:
                d = (off.c * r_out[0] - off.s * r_out[1],
                     off.s * r_out[0] + off.c * r_out[1])
                return t, c, d
        raise AssertionError("position not located in fan")


class Mesh:
    """Triangulated surface: triangles + adjacency + vertex fans."""

    def __init__(self):
        self.tris: list[Tri] = []
        self.fans: list[Fan] = []
        self.poly_tris: list[list[int]] = []  # triangles per polygon
        self.boundary_edge: dict = {}  # (poly, edge) -> (tri, e)


class FlatSurface:
    """Validated compact half-translation surface (immutable after build)."""

    def __init__(self, polygons, gluings, cone_points, chi, mesh):
        self.polygons: list[list[Vec]] = polygons
        self.gluings: list[Gluing] = gluings
        self.cone_points: list[ConePoint] = cone_points
        self.euler_characteristic: int = chi
        self.mesh: Mesh = mesh
        # (poly, edge) -> (gluing index, +1 if src side, -1 if dst side)
        self.edge_side: dict = {}
        for i, g in enumerate(gluings):
            self.edge_side[g.src] = (i, 1)
            self.edge_side[g.dst] = (i, -1)

    # -- lookups -------------------------------------------------------------

    def polygon_edge(self, p: int, e: int) -> tuple[Vec, Vec]:
        poly = self.polygons[p]
        return poly[e], poly[(e + 1) % len(poly)]

    def gluing_map(self, gidx: int, direction: int) -> AffineMap:
        g = self.gluings[gidx]
        return g.map if direction > 0 else g.map.inverse()

    def gluing_ends(self, gidx: int, direction: int) -> tuple[tuple[int, int], tuple[int, int]]:
        g = self.gluings[gidx]
        return (g.src, g.dst) if direction > 0 else (g.dst, g.src)

    def cone_point_at(self, vclass: int) -> ConePoint:
        return self.cone_points[vclass]

    def vertex_fan(self, vclass: int) -> Fan:
        return self.mesh.fans[vclass]

    def to_json_dict(self) -> dict:
        return canonical_json_dict(self.polygons, self.gluings)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


# -- operations ---------------------------------------------------------------


def cone_angle(surface: FlatSurface, cone_point: ConePoint) -> int:
    """The integer k with total angle k*pi at the given corner class."""
    return cone_point.angle_multiple


def validate_surface(raw) -> FlatSurface:
    """Parse and validate a surface description (dict or JSON string)."""
    if isinstance(raw, (str, bytes)):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON: {e}") from None
    if not isinstance(raw, dict) or "polygons" not in raw or "gluings" not in raw:
        raise FormatError("surface file must contain 'polygons' and 'gluings'")
    try:
        polygons = [[(parse_frac(x), parse_frac(y)) for x, y in poly]
                    for poly in raw["polygons"]]
        gluings_raw = [(tuple(g["from"]), tuple(g["to"]), int(g["epsilon"]),
                        (parse_frac(g["t"][0]), parse_frac(g["t"][1])))
                       for g in raw["gluings"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise FormatError(f"malformed surface description: {e}") from None
    return build_surface(polygons, gluings_raw)


def build_surface(polygons: list[list[Vec]], gluings_raw) -> FlatSurface:
    # polygons: simple, ccw, no repeated vertices
    if not polygons:
        raise InvalidPolygon("no polygons")
    for p, poly in enumerate(polygons):
        if len(poly) < 3:
            raise InvalidPolygon(f"polygon {p} has fewer than 3 vertices")
        if polygon_area2(poly) <= 0:
            raise InvalidPolygon(f"polygon {p} is not positively oriented (ccw)")
        if not polygon_is_simple(poly):
            raise InvalidPolygon(f"polygon {p} is not simple")

    gluings: list[Gluing] = []
    for k, (src, dst, eps, t) in enumerate(gluings_raw):
        if eps not in (1, -1):
            raise FormatError(f"gluing {k}: epsilon must be +-1")
        gluings.append(Gluing(src, dst, AffineMap(eps, t)))

    # every directed edge in exactly one gluing; no self-glued directed edge
    seen = {}
    for k, g in enumerate(gluings):
        if g.src == g.dst:
            raise GluingMismatch(f"gluing {k} glues edge {g.src} to itself")
        for side in (g.src, g.dst):
            p, e = side
            if not (0 <= p < len(polygons)) or not (0 <= e < len(polygons[p])):
                raise FormatError(f"gluing {k} references missing edge {side}")
            if side in seen:
                raise GluingMismatch(f"edge {side} appears in gluings {seen[side]} and {k}")
            seen[side] = k
    for p, poly in enumerate(polygons):
        for e in range(len(poly)):
            if (p, e) not in seen:
                raise GluingMismatch(f"edge {(p, e)} is not glued (boundary not supported)")

    # geometric compatibility: map carries src edge onto dst edge reversed
    for k, g in enumerate(gluings):
        (p, e), (q, f) = g.src, g.dst
        a = polygons[p][e]
        b = polygons[p][(e + 1) % len(polygons[p])]
        c = polygons[q][f]
        d = polygons[q][(f + 1) % len(polygons[q])]
        if not (g.map.apply(a) == d and g.map.apply(b) == c):
            raise GluingMismatch(
                f"gluing {k}: map does not carry edge {g.src} onto reversed edge {g.dst}")

    # connectivity of the polygon adjacency graph
    parent = list(range(len(polygons)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gluings:
        a, b = find(g.src[0]), find(g.dst[0])
        if a != b:
            parent[a] = b
    if len({find(p) for p in range(len(polygons))}) != 1:
        raise Disconnected("polygon gluing graph is disconnected")

    mesh = _build_mesh(polygons, gluings)
    cone_points = _build_vertex_classes(polygons, gluings, mesh)

    V = len(cone_points)
    E = len(gluings)
    F = len(polygons)
    chi = V - E + F
    if chi >= 0:
        raise EulerCharacteristic(f"chi = {chi} >= 0")
    # Gauss-Bonnet consistency (holds by construction; assert anyway)
    assert sum(2 - cp.angle_multiple for cp in cone_points) == 2 * chi

    return FlatSurface(polygons, gluings, cone_points, chi, mesh)


# -- triangulation ------------------------------------------------------------


def triangulate_polygon(poly: list[Vec]) -> list[tuple[int, int, int]]:
    """Ear-clipping triangulation using only polygon vertices (exact)."""
    n = len(poly)
    idx = list(range(n))
    tris = []
    guard = 0
    while len(idx) > 3:
        guard += 1
        if guard > 10 * n * n:
            raise InvalidPolygon("triangulation failed to make progress")
        clipped = False
        for j in range(len(idx)):
            i0, i1, i2 = (idx[(j - 1) % len(idx)], idx[j], idx[(j + 1) % len(idx)])
            a, b, c = poly[i0], poly[i1], poly[i2]
            if orient(a, b, c) <= 0:
                continue  # reflex or straight tip
            ok = True
            for m in idx:
                if m in (i0, i1, i2):
                    continue
                p = poly[m]
                if _in_closed_triangle(p, a, b, c):
                    ok = False
                    break
            if ok:
                tris.append((i0, i1, i2))
                idx.pop(j)
                clipped = True
                break
        if not clipped:
            raise InvalidPolygon("no ear found (polygon not simple?)")
    tris.append(tuple(idx))
    return tris


def _in_closed_triangle(p: Vec, a: Vec, b: Vec, c: Vec) -> bool:
    return (orient(a, b, p) >= 0 and orient(b, c, p) >= 0 and orient(c, a, p) >= 0)


def _build_mesh(polygons, gluings) -> Mesh:
    mesh = Mesh()
    directed: dict = {}  # (poly, vi, vj) -> (tri_index, edge)
    for p, poly in enumerate(polygons):
        mesh.poly_tris.append([])
        for tri_vi in triangulate_polygon(poly):
            t = Tri(len(mesh.tris), p,
                    (poly[tri_vi[0]], poly[tri_vi[1]], poly[tri_vi[2]]), tri_vi)
            mesh.tris.append(t)
            mesh.poly_tris[p].append(t.index)
            for e in range(3):
                directed[(p, tri_vi[e], tri_vi[(e + 1) % 3])] = (t.index, e)
    # internal diagonals: the reversed directed pair exists in the same polygon
    for (p, vi, vj), (ti, e) in directed.items():
        tri = mesh.tris[ti]
        if tri.adj[e] is not None:
            continue
        rev = directed.get((p, vj, vi))
        if rev is not None:
            tj, f = rev
            tri.adj[e] = (tj, f, IDENTITY)
            mesh.tris[tj].adj[f] = (ti, e, IDENTITY)
            tri.edge_label[e] = ("internal",)
            mesh.tris[tj].edge_label[f] = ("internal",)
    # polygon boundary edges
    for p, poly in enumerate(polygons):
        n = len(poly)
        for e in range(n):
            key = (p, e, (e + 1) % n)
            mesh.boundary_edge[(p, e)] = directed[key]
    for k, g in enumerate(gluings):
        (p, e), (q, f) = g.src, g.dst
        ti, ei = mesh.boundary_edge[(p, e)]
        tj, ej = mesh.boundary_edge[(q, f)]
        mesh.tris[ti].adj[ei] = (tj, ej, g.map)
        mesh.tris[tj].adj[ej] = (ti, ei, g.map.inverse())
        mesh.tris[ti].edge_label[ei] = ("gluing", k, 1)
        mesh.tris[tj].edge_label[ej] = ("gluing", k, -1)
    for t in mesh.tris:
        assert all(a is not None for a in t.adj)
    return mesh


def _build_vertex_classes(polygons, gluings, mesh: Mesh) -> list[ConePoint]:
    """Walk corner fans ccw; assign vertex classes and exact total angles."""
    visited = {}
    fans = []
    for t0 in mesh.tris:
        for c0 in range(3):
            if (t0.index, c0) in visited:
                continue
            vclass = len(fans)
            corners = []
            starts = []
            total = AnglePos.zero()
            t, c = t0.index, c0
            while True:
                corners.append((t, c))
                starts.append(total)
                visited[(t, c)] = vclass
                tri = mesh.tris[t]
                r_out = vsub(tri.verts[(c + 1) % 3], tri.verts[c])
                r_in = vsub(tri.verts[(c + 2) % 3], tri.verts[c])
                n_half, cc, ss = ccw_corner_contrib(r_out, r_in)
                if n_half:  # triangle corners are strictly convex
                    raise NonAdmissibleAngle("degenerate triangle corner")
                total = total.add_contrib(cc, ss)
                # ccw: cross the incoming edge (c+2)%3
                tnext, enext, _m = tri.adj[(c + 2) % 3]
                t, c = tnext, enext
                if (t, c) == (t0.index, c0):
                    break
            if not total.is_multiple_of_pi():
                raise NonAdmissibleAngle("cone angle is not an integer multiple of pi")
            k = total.n
            if k < 2:
                raise NonAdmissibleAngle(
                    f"cone angle {k}*pi < 2*pi is not admissible on a closed surface")
            fans.append(Fan(vclass, corners, starts, k, mesh))
    mesh.fans = fans
    for (t, c), v in visited.items():
        mesh.tris[t].vclass[c] = v

    cone_points = []
    for fan in fans:
        poly_corners = set()
        for (t, c) in fan.corners:
            tri = mesh.tris[t]
            poly_corners.add((tri.poly, tri.vidx[c]))
        cone_points.append(ConePoint(fan.vclass, frozenset(poly_corners), fan.k))
    return cone_points


# -- canonical serialization ---------------------------------------------------


def canonical_json_dict(polygons, gluings) -> dict:
    """Canonical form: each polygon rotated to its least vertex, polygons and
    gluings sorted lexicographically, gluings oriented src <= dst."""
    rots = []
    keys = []
    for poly in polygons:
        r = min(range(len(poly)), key=lambda i: poly[i])
        rots.append(r)
        keys.append(tuple(poly[(r + i) % len(poly)] for i in range(len(poly))))
    order = sorted(range(len(polygons)), key=lambda p: (keys[p], p))
    newidx = {p: i for i, p in enumerate(order)}

    def remap(side):
        p, e = side
        n = len(polygons[p])
        return (newidx[p], (e - rots[p]) % n)

    polys_out = [[[fmt_frac(x), fmt_frac(y)] for (x, y) in keys[p]] for p in order]
    gl_out = []
    for g in gluings:
        s, d, m = remap(g.src), remap(g.dst), g.map
        if d < s:
            s, d, m = d, s, m.inverse()
        gl_out.append({"from": list(s), "to": list(d), "epsilon": m.eps,
                       "t": [fmt_frac(m.t[0]), fmt_frac(m.t[1])]})
    gl_out.sort(key=lambda g: (g["from"], g["to"]))
    return {"polygons": polys_out, "gluings": gl_out}
