"""Developing polygon chains into the plane with +-Id holonomy tracking.

Words are sequences of gluing tokens "g<k>" (cross gluing k from its src side)
or "g<k>'" (cross it backwards).  A closed word develops to a deck element
(eps, t); triangle-level windows refine a word chain through the mesh and
carry the developed portal segments used by tightening and crossing counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, InconsistentToken, TrivialClass, UnreducedWord
from .geom import (IDENTITY, AffineMap, Vec, cross, dot, rot90, sign, smul,
                   vadd, vneg, vsub)
from .radicals import sqrt_canonical
from .surface_core import FlatSurface

Token = tuple[int, int]  # (gluing index, +1 forward / -1 backward)


def parse_word(text: str) -> tuple[Token, ...]:
    toks = []
    for w in str(text).split():
        if not w.startswith("g"):
            raise FormatError(f"bad token {w!r}")
        body = w[1:]
        d = 1
        if body.endswith("'"):
            d = -1
            body = body[:-1]
        try:
            toks.append((int(body), d))
        except ValueError:
            raise FormatError(f"bad token {w!r}") from None
    return tuple(toks)


def format_word(tokens) -> str:
    return " ".join(f"g{k}" + ("'" if d < 0 else "") for k, d in tokens)


def token_inverse(tok: Token) -> Token:
    return (tok[0], -tok[1])


def free_reduce(tokens) -> tuple[Token, ...]:
    out = []
    for t in tokens:
        if out and out[-1] == token_inverse(t):
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def cyclic_reduce(tokens) -> tuple[Token, ...]:
    toks = list(free_reduce(tokens))
    while len(toks) >= 2 and toks[0] == token_inverse(toks[-1]):
        toks = toks[1:-1]
    return tuple(toks)


def check_reduced(tokens):
    """Reject words with (cyclically) adjacent inverse tokens."""
    if tuple(tokens) != free_reduce(tokens):
        raise UnreducedWord(format_word(tokens))
    if len(tokens) >= 2 and tokens[0] == token_inverse(tokens[-1]):
        raise UnreducedWord(f"cyclically unreduced: {format_word(tokens)}")


@dataclass(frozen=True)
class DevelopedCell:
    polygon: int
    dev: AffineMap
    parent_crossing: Token | None = None


@dataclass(frozen=True)
class DeckElement:
    eps: int
    translation: Vec
    word: tuple[Token, ...]

    @property
    def map(self) -> AffineMap:
        return AffineMap(self.eps, self.translation)

    def power(self, n: int) -> "DeckElement":
        m = IDENTITY
        for _ in range(n):
            m = self.map.compose(m)
        return DeckElement(m.eps, m.t, self.word * n)

    def compose(self, other: "DeckElement") -> "DeckElement":
        m = self.map.compose(other.map)
        return DeckElement(m.eps, m.t, other.word + self.word)

    def is_identity(self) -> bool:
        return self.map.is_identity()


def token_ends(surface: FlatSurface, tok: Token):
    gidx, d = tok
    if not (0 <= gidx < len(surface.gluings)):
        raise FormatError(f"unknown gluing g{gidx}")
    return surface.gluing_ends(gidx, d)


def token_map(surface: FlatSurface, tok: Token) -> AffineMap:
    return surface.gluing_map(tok[0], tok[1])


def develop_chain(surface: FlatSurface, start: DevelopedCell, word,
                  repeats: int = 1) -> list[DevelopedCell]:
    """Develop the chain of polygon cells crossed by ``word``, repeated."""
    tokens = parse_word(word) if isinstance(word, str) else tuple(word)
    cells = [start]
    poly, dev = start.polygon, start.dev
    for _ in range(repeats):
        for tok in tokens:
            src, dst = token_ends(surface, tok)
            if src[0] != poly:
                raise InconsistentToken(
                    f"token g{tok[0]}{'' if tok[1] > 0 else chr(39)} not incident "
                    f"to polygon {poly}")
            m = token_map(surface, tok)
            dev = dev.compose(m.inverse())
            poly = dst[0]
            cells.append(DevelopedCell(poly, dev, tok))
    return cells


def word_start_polygon(surface: FlatSurface, tokens) -> int:
    if not tokens:
        return 0
    return token_ends(surface, tokens[0])[0][0]


def deck_element(surface: FlatSurface, word) -> DeckElement:
    """Deck element of a closed word (start cell: the word's first polygon)."""
    tokens = parse_word(word) if isinstance(word, str) else tuple(word)
    start = DevelopedCell(word_start_polygon(surface, tokens), IDENTITY)
    cells = develop_chain(surface, start, tokens)
    if cells[-1].polygon != start.polygon:
        raise InconsistentToken("word does not close up (end polygon differs)")
    m = cells[-1].dev
    return DeckElement(m.eps, m.t, tokens)


# -- triangle-level windows ----------------------------------------------------


@dataclass
class DevCell:
    tri: int
    dev: AffineMap
    entry_edge: int  # edge of tri through which this cell is entered


class Window:
    """A developed triangle chain for ``repeats`` periods of a closed word.

    cells[0] is entered (from the previous period) through cells[0].entry_edge;
    ``twist`` maps the developed chain one period forward: the cell following
    cells[-1] is cells[0] with dev = twist o cells[0].dev ... recurring.
    """

    def __init__(self, surface: FlatSurface, tokens, cells, period_len,
                 period_map: AffineMap):
        self.surface = surface
        self.tokens = tokens
        self.cells: list[DevCell] = cells
        self.period_len = period_len  # cells per period
        self.twist = period_map

    def portal(self, j: int) -> tuple[Vec, Vec]:
        """Developed entry segment of cell j, ordered (left, right) for a
        traveler entering the cell."""
        c = self.cells[j]
        tri = self.surface.mesh.tris[c.tri]
        a, b = tri.edge(c.entry_edge)
        return c.dev.apply(a), c.dev.apply(b)

    def n_cells(self) -> int:
        return len(self.cells)


def _poly_internal_path(surface: FlatSurface, poly: int, tri_in: int,
                        tri_out: int) -> list[tuple[int, int]]:
    """Path of (tri, entry_edge) steps from tri_in to tri_out crossing only
    internal diagonals of the polygon's triangulation (a tree, so unique)."""
    mesh = surface.mesh
    if tri_in == tri_out:
        return []
    prev = {tri_in: None}
    frontier = [tri_in]
    while frontier:
        nxt = []
        for t in frontier:
            tri = mesh.tris[t]
            for e in range(3):
                if tri.edge_label[e][0] != "internal":
                    continue
                t2, e2, _m = tri.adj[e]
                if t2 not in prev:
                    prev[t2] = (t, e, e2)
                    nxt.append(t2)
        frontier = nxt
    assert tri_out in prev, "triangulation dual graph not connected"
    steps = []
    cur = tri_out
    while prev[cur] is not None:
        t, e, e2 = prev[cur]
        steps.append((cur, e2))
        cur = t
    steps.reverse()
    return steps


def expand_word(surface: FlatSurface, word, repeats: int = 1,
                require_reduced: bool = True) -> Window:
    """Triangle-level developed window for a closed word."""
    tokens = parse_word(word) if isinstance(word, str) else tuple(word)
    if not tokens:
        raise TrivialClass("empty word")
    if require_reduced:
        check_reduced(tokens)
    mesh = surface.mesh
    # polygon-level closure check
    poly = word_start_polygon(surface, tokens)
    for tok in tokens:
        src, dst = token_ends(surface, tok)
        if src[0] != poly:
            raise InconsistentToken(
                f"token g{tok[0]}{'' if tok[1] > 0 else chr(39)} not incident to "
                f"polygon {poly}")
        poly = dst[0]
    if poly != word_start_polygon(surface, tokens):
        raise InconsistentToken("word does not close up")

    cells: list[DevCell] = []
    dev = IDENTITY
    last_src, last_dst = token_ends(surface, tokens[-1])
    entry_tri, entry_edge = mesh.boundary_edge[last_dst]

    cur_tri, cur_entry = entry_tri, entry_edge
    period_cells = None
    for rep in range(repeats):
        for tok in tokens:
            src, dst = token_ends(surface, tok)
            exit_tri, exit_edge = mesh.boundary_edge[src]
            cells.append(DevCell(cur_tri, dev, cur_entry))
            for (t, e_entry) in _poly_internal_path(
                    surface, src[0], cur_tri, exit_tri):
                # crossing an internal diagonal keeps the chart
                cells.append(DevCell(t, dev, e_entry))
            m = token_map(surface, tok)
            dev = dev.compose(m.inverse())
            nxt_tri, nxt_edge = mesh.boundary_edge[dst]
            cur_tri, cur_entry = nxt_tri, nxt_edge
        if period_cells is None:
            period_cells = len(cells)
    assert (cur_tri, cur_entry) == (entry_tri, entry_edge)
    return Window(surface, tokens, cells, period_cells, _period_map(cells, dev, repeats))


def _period_map(cells, final_dev: AffineMap, repeats: int) -> AffineMap:
    """Map advancing the developed chain by one period."""
    if repeats == 1:
        return final_dev
    # final_dev = M^repeats with M the single-period map; recover M from the
    # dev of the first cell of the second period.
    per = len(cells) // repeats
    return cells[per].dev  # cells[0].dev is identity


# -- straight-line tracing -----------------------------------------------------


@dataclass
class TraceEvent:
    kind: str  # "crossing" | "cone"
    point_chart: Vec  # in the chart being left
    point_dev: Vec
    gluing: Token | None = None  # polygon-level crossing token
    cell: DevelopedCell | None = None  # cell entered (crossing events)
    cone_class: int | None = None


@dataclass
class CrossingTrace:
    events: list
    end_cell: DevelopedCell | None
    end_point_chart: Vec | None
    end_point_dev: Vec | None
    length2: Fraction
    terminated: str  # "bound" | "cone"


def _inward(tri, e: int) -> Vec:
    a, b = tri.edge(e)
    return rot90(vsub(b, a))


def locate_triangle(surface: FlatSurface, poly: int, p: Vec, d: Vec) -> int:
    """Triangle of ``poly`` containing p with direction d pointing inside."""
    mesh = surface.mesh
    candidates = []
    for t in mesh.poly_tris[poly]:
        tri = mesh.tris[t]
        sides = [sign(cross(vsub(tri.verts[(e + 1) % 3], tri.verts[e]),
                            vsub(p, tri.verts[e]))) for e in range(3)]
        if all(s >= 0 for s in sides):
            candidates.append((t, sides))
    for t, sides in candidates:
        tri = mesh.tris[t]
        ok = True
        for e in range(3):
            if sides[e] == 0:
                n = _inward(tri, e)
                dn = dot(n, d)
                if dn < 0:
                    ok = False
                    break
                if dn == 0:
                    # along the edge: accept only if d points along it with the
                    # far endpoint ahead
                    a, b = tri.edge(e)
                    if dot(d, vsub(b, a)) == 0:
                        ok = False
                        break
        if ok:
            return t
    raise ValueError(f"point {p} with direction {d} not inside polygon {poly}")


def _exit_of_ray(tri, p: Vec, d: Vec):
    """(t_exit, zero_edges): smallest t > 0 where the ray leaves the triangle."""
    t_exit = None
    for e in range(3):
        n = _inward(tri, e)
        dn = dot(n, d)
        if dn < 0:
            t = dot(n, vsub(tri.verts[e], p)) / dn
            if t_exit is None or t < t_exit:
                t_exit = t
    assert t_exit is not None and t_exit >= 0
    q = vadd(p, smul(t_exit, d))
    zero = [e for e in range(3)
            if dot(_inward(tri, e), vsub(q, tri.verts[e])) == 0]
    return t_exit, q, zero


def fan_continue(surface: FlatSurface, tri_idx: int, vclass: int, corner: int,
                 d: Vec, dev: AffineMap):
    """Continue a straight trace through a regular vertex.

    Arrives at vertex ``corner`` of ``tri_idx`` along direction d; returns
    (tri_out, corner_out, d_out, dev_out)."""
    fan = surface.vertex_fan(vclass)
    assert fan.k == 2, "fan_continue only at regular vertices"
    back = vneg(d)
    pos = fan.position(tri_idx, corner, back)
    target = pos.add_contrib(Fraction(-1), Fraction(0))  # +pi
    t_out, c_out, d_out = fan.direction_at(target.mod_half_turns(2))
    # accumulate dev along the ccw fan walk from (tri, corner) to (t_out, c_out)
    mesh = surface.mesh
    t, c = tri_idx, corner
    dev_out = dev
    for _ in range(len(fan.corners) + 1):
        if (t, c) == (t_out, c_out):
            return t_out, c_out, d_out, dev_out
        tri = mesh.tris[t]
        t2, e2, m = tri.adj[(c + 2) % 3]
        dev_out = dev_out.compose(m.inverse())
        t, c = t2, e2
    raise AssertionError("fan walk did not close")


def trace_segment(surface: FlatSurface, start: DevelopedCell, point: Vec,
                  direction: Vec, stop) -> CrossingTrace:
    """Trace the straight ray from ``point`` in ``start``'s chart.

    ``stop`` is ("cells", n) for a polygon-cell count bound or ("length2", q)
    for a squared-arclength bound.  Terminates early at singular vertices
    (ConePointHit as a distinguished terminal event)."""
    if direction == (0, 0):
        raise ValueError("zero direction")
    mode, bound = stop
    if mode not in ("cells", "length2"):
        raise ValueError("stop must be ('cells', n) or ('length2', q)")
    mesh = surface.mesh
    d2 = dot(direction, direction)
    t_stop = None
    if mode == "length2":
        r, sq = sqrt_canonical(Fraction(bound) / d2)
        t_stop = r if sq == 1 else None
        t_stop_sq = Fraction(bound) / d2

    tri_idx = locate_triangle(surface, start.polygon, point, direction)
    dev = start.dev
    d_chart = direction
    p_chart = point
    p0_dev = dev.apply(point)
    d_dev = dev.apply_dir(direction)
    events: list[TraceEvent] = []
    cells_entered = 1
    t_total = Fraction(0)  # in units of |direction|

    def dev_point(t):
        return vadd(p0_dev, smul(t, d_dev))

    for _guard in range(100000):
        tri = mesh.tris[tri_idx]
        t_exit, q, zero_edges = _exit_of_ray(tri, p_chart, d_chart)
        t_here = t_total + t_exit
        if mode == "length2":
            reached = (t_stop is not None and t_here > t_stop) or \
                (t_stop is None and t_here * t_here * d2 > Fraction(bound))
            if reached:
                if t_stop is not None:
                    t_rel = t_stop - t_total
                    end_chart = vadd(p_chart, smul(t_rel, d_chart))
                    return CrossingTrace(events, DevelopedCell(tri.poly, dev),
                                         end_chart, dev.apply(end_chart),
                                         t_stop * t_stop * d2, "bound")
                last = events[-1] if events else None
                endc = last.point_chart if last else p_chart
                return CrossingTrace(events, DevelopedCell(tri.poly, dev),
                                     endc, dev.apply(endc),
                                     t_total * t_total * d2, "bound")
        if len(zero_edges) >= 2:
            # vertex hit: identify the corner
            corner = None
            for c in range(3):
                if tri.verts[c] == q:
                    corner = c
                    break
            assert corner is not None
            vclass = tri.vclass[corner]
            if surface.cone_points[vclass].is_singular:
                events.append(TraceEvent("cone", q, dev.apply(q),
                                         cone_class=vclass))
                return CrossingTrace(events, DevelopedCell(tri.poly, dev), q,
                                     dev.apply(q), t_here * t_here * d2, "cone")
            t2, c2, d_out, dev2 = fan_continue(surface, tri_idx, vclass, corner,
                                               d_chart, dev)
            if mesh.tris[t2].poly != tri.poly:
                cells_entered += 1  # regular vertex between polygons
                events.append(TraceEvent("crossing", q, dev.apply(q), None,
                                         DevelopedCell(mesh.tris[t2].poly, dev2)))
                if mode == "cells" and cells_entered >= bound:
                    qc = mesh.tris[t2].verts[c2]
                    return CrossingTrace(events, DevelopedCell(mesh.tris[t2].poly, dev2),
                                         qc, dev2.apply(qc), t_here * t_here * d2,
                                         "bound")
            tri_idx = t2
            dev = dev2
            p_chart = mesh.tris[t2].verts[c2]
            d_chart = d_out
            t_total = t_here
            continue
        e = zero_edges[0]
        lab = tri.edge_label[e]
        t2, e2, m = tri.adj[e]
        dev2 = dev.compose(m.inverse())
        q2 = m.apply(q)
        if lab[0] == "gluing":
            tok = (lab[1], lab[2])
            cells_entered += 1
            cell2 = DevelopedCell(mesh.tris[t2].poly, dev2, tok)
            events.append(TraceEvent("crossing", q, dev.apply(q), tok, cell2))
            if mode == "cells" and cells_entered >= bound:
                return CrossingTrace(events, cell2, q2, dev2.apply(q2),
                                     t_here * t_here * d2, "bound")
        tri_idx = t2
        dev = dev2
        p_chart = q2
        d_chart = m.apply_dir(d_chart)
        t_total = t_here
    raise AssertionError("trace did not terminate within guard bound")
