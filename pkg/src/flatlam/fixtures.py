"""Built-in test surfaces and their standard probe curves."""
from __future__ import annotations

from fractions import Fraction as F

from .surface_core import FlatSurface, build_surface


def l_shape() -> FlatSurface:
    """L-shaped union of A = [0,2]x[0,1] and B = [0,1]x[1,2], opposite sides
    glued by translations.  Genus 2, one cone point of angle 6*pi.

    Gluings: g0 A.bottom-left <-> B.top, g1 A.bottom-right <-> A.top-right,
    g2 A.right <-> A.left, g3 A.top-left <-> B.bottom, g4 B.right <-> B.left.
    """
    A = [(F(0), F(0)), (F(1), F(0)), (F(2), F(0)),
         (F(2), F(1)), (F(1), F(1)), (F(0), F(1))]
    B = [(F(0), F(1)), (F(1), F(1)), (F(1), F(2)), (F(0), F(2))]
    gl = [
        ((0, 0), (1, 2), 1, (F(0), F(2))),   # g0
        ((0, 1), (0, 3), 1, (F(0), F(1))),   # g1
        ((0, 2), (0, 5), 1, (F(-2), F(0))),  # g2
        ((0, 4), (1, 0), 1, (F(0), F(0))),   # g3
        ((1, 1), (1, 3), 1, (F(-1), F(0))),  # g4
    ]
    return build_surface([A, B], gl)


L_WORDS = {
    "h": "g2",        # horizontal cylinder, circumference 2, width 1
    "h2": "g4",       # horizontal cylinder in B, circumference 1, width 1
    "v": "g3 g0'",    # vertical cylinder in the left column, circumference 2
    "v2": "g1'",      # vertical cylinder in the right column, circumference 1
    "hv": "g2 g3 g0'",
}


def octagon() -> FlatSurface:
    """Centrally symmetric rational octagon, opposite sides glued by
    translations.  Genus 2, one cone point of angle 6*pi."""
    P = [(F(0), F(0)), (F(1), F(0)), (F(2), F(1)), (F(2), F(2)),
         (F(1), F(3)), (F(0), F(3)), (F(-1), F(2)), (F(-1), F(1))]
    gl = [
        ((0, 0), (0, 4), 1, (F(0), F(3))),
        ((0, 1), (0, 5), 1, (F(-2), F(2))),
        ((0, 2), (0, 6), 1, (F(-3), F(0))),
        ((0, 3), (0, 7), 1, (F(-2), F(-2))),
    ]
    return build_surface([P], gl)


OCT_WORDS = {"a": "g0", "b": "g1", "c": "g2", "d": "g3"}


def square_torus_raw() -> dict:
    """Unit square torus description (chi = 0; must fail validation)."""
    return {
        "polygons": [[["0/1", "0/1"], ["1/1", "0/1"], ["1/1", "1/1"], ["0/1", "1/1"]]],
        "gluings": [
            {"from": [0, 0], "to": [0, 2], "epsilon": 1, "t": ["0/1", "1/1"]},
            {"from": [0, 1], "to": [0, 3], "epsilon": 1, "t": ["-1/1", "0/1"]},
        ],
    }


def half_translation() -> FlatSurface:
    """A genus-2 half-translation surface with essential -Id gluings.

    Four unit squares, two cone points of angle 4*pi (found by exhaustive
    search over square gluing patterns, scripts/find_half_translation.py).
    No per-square sign change turns the four flips into translations.
    """
    sq = [(F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))]
    gl = [
        ((0, 0), (0, 2), 1, (F(0), F(1))),    # g0
        ((1, 0), (1, 2), 1, (F(0), F(1))),    # g1
        ((2, 0), (3, 0), -1, (F(1), F(0))),   # g2
        ((2, 2), (3, 2), -1, (F(1), F(2))),   # g3
        ((0, 1), (2, 1), -1, (F(2), F(1))),   # g4
        ((0, 3), (3, 3), -1, (F(0), F(1))),   # g5
        ((1, 1), (2, 3), 1, (F(-1), F(0))),   # g6
        ((1, 3), (3, 1), 1, (F(1), F(0))),    # g7
    ]
    return build_surface([list(sq) for _ in range(4)], gl)


HT_WORDS = {
    "u0": "g0'",      # vertical cylinder through square 0
    "u1": "g1'",      # vertical cylinder through square 1
    "r": "g6 g4' g5 g7'",  # loop through squares 1, 2, 0, 3
    "w": "g6 g2 g7'",      # loop through squares 1, 2, 3
}
