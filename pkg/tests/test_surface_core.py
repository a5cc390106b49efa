import json
from fractions import Fraction as F

import pytest

from flatlam import fixtures
from flatlam.errors import (Disconnected, EulerCharacteristic, GluingMismatch,
                            InvalidPolygon)
from flatlam.surface_core import cone_angle, validate_surface

from oracles import corner_classes


def l21_raw():
    return json.loads(fixtures.l_shape().to_json())


def test_l21_valid(l21):
    assert l21.euler_characteristic == -2
    assert len(l21.cone_points) == 1
    cp = l21.cone_points[0]
    # one cone point of angle 6*pi (Gauss-Bonnet: 6pi - 2pi = 4pi = -2pi*chi)
    assert cone_angle(l21, cp) == 6
    assert cp.is_singular


def test_l21_cone_class_matches_oracle(l21):
    gl = [(g.src, g.dst, g.map.eps, g.map.t) for g in l21.gluings]
    oracle = corner_classes(l21.polygons, gl)
    assert len(oracle) == 1
    cls, k = oracle[0]
    assert k == 6
    assert cls == set(l21.cone_points[0].corner_class)


def test_octagon_cone_angle(oct2):
    # genus-2 octagon-style fixture: one vertex class, k = 6
    assert [cp.angle_multiple for cp in oct2.cone_points] == [6]
    gl = [(g.src, g.dst, g.map.eps, g.map.t) for g in oct2.gluings]
    oracle = corner_classes(oct2.polygons, gl)
    assert [k for _c, k in oracle] == [6]


def test_half_translation_fixture(ht):
    assert ht.euler_characteristic == -2
    assert sorted(cp.angle_multiple for cp in ht.cone_points) == [4, 4]
    assert any(g.map.eps == -1 for g in ht.gluings)
    gl = [(g.src, g.dst, g.map.eps, g.map.t) for g in ht.gluings]
    assert sorted(k for _c, k in corner_classes(ht.polygons, gl)) == [4, 4]


def test_torus_rejected():
    with pytest.raises(EulerCharacteristic):
        validate_surface(fixtures.square_torus_raw())


def test_gluing_mismatch():
    raw = l21_raw()
    bad = json.loads(json.dumps(raw))
    g = bad["gluings"][0]
    tx, ty = g["t"]
    g["t"] = [tx, ty + "7" if "/" not in ty else f"{F(ty) + F(1, 7)}"]
    with pytest.raises(GluingMismatch):
        validate_surface(bad)


def test_unglued_edge_rejected():
    raw = l21_raw()
    raw["gluings"] = raw["gluings"][:-1]
    with pytest.raises(GluingMismatch):
        validate_surface(raw)


def test_self_glued_directed_edge_rejected():
    raw = l21_raw()
    raw["gluings"][0]["to"] = raw["gluings"][0]["from"]
    with pytest.raises(GluingMismatch):
        validate_surface(raw)


def test_disconnected_rejected():
    # two disjoint copies of the octagon
    o = fixtures.octagon()
    raw = json.loads(o.to_json())
    polys = raw["polygons"] + raw["polygons"]
    gl = list(raw["gluings"])
    for g in raw["gluings"]:
        gl.append({"from": [1, g["from"][1]], "to": [1, g["to"][1]],
                   "epsilon": g["epsilon"], "t": g["t"]})
    with pytest.raises(Disconnected):
        validate_surface({"polygons": polys, "gluings": gl})


def test_cw_polygon_rejected():
    raw = l21_raw()
    raw["polygons"][0] = raw["polygons"][0][::-1]
    with pytest.raises(InvalidPolygon):
        validate_surface(raw)


def test_roundtrip_idempotent(l21, oct2, ht):
    for s in (l21, oct2, ht):
        j1 = s.to_json()
        s2 = validate_surface(j1)
        assert s2.to_json() == j1
        assert s2.euler_characteristic == s.euler_characteristic


def test_involution_no_fixed_directed_edge(l21, ht):
    for s in (l21, ht):
        sides = set()
        for g in s.gluings:
            assert g.src != g.dst
            sides.add(g.src)
            sides.add(g.dst)
        n_edges = sum(len(p) for p in s.polygons)
        assert len(sides) == n_edges


def test_gauss_bonnet_exact(l21, oct2, ht):
    for s in (l21, oct2, ht):
        assert sum(2 - cp.angle_multiple for cp in s.cone_points) == \
            2 * s.euler_characteristic


def test_regular_edge_point_has_angle_two():
    # interior of an edge is a regular point: total angle 2*pi by construction;
    # the mesh only has vertex classes, so check all fans sum to k*pi with the
    # regular ones flagged non-singular.
    s = fixtures.l_shape()
    for cp in s.cone_points:
        if cp.angle_multiple == 2:
            assert not cp.is_singular
