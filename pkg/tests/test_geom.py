import math
from fractions import Fraction as F

from hypothesis import given
from hypothesis import strategies as st

from flatlam.geom import (AffineMap, AnglePos, ccw_corner_contrib, cross,
                          fmt_frac, parse_frac, point_in_polygon,
                          primitive_direction, seg_seg_intersection)
from flatlam.radicals import SqrtSum

small = st.integers(-6, 6)
vec_st = st.tuples(small, small).map(lambda t: (F(t[0]), F(t[1])))
nonzero_vec = vec_st.filter(lambda v: v != (0, 0))


def test_frac_roundtrip():
    assert parse_frac("-3/7") == F(-3, 7)
    assert fmt_frac(F(5)) == "5/1"
    assert parse_frac(fmt_frac(F(22, 8))) == F(11, 4)


@given(vec_st, st.sampled_from([1, -1]), vec_st, st.sampled_from([1, -1]), vec_st)
def test_affine_composition(t1, e1, t2, e2, p):
    m1, m2 = AffineMap(e1, t1), AffineMap(e2, t2)
    assert m1.compose(m2).apply(p) == m1.apply(m2.apply(p))
    assert m1.compose(m1.inverse()).is_identity()


@given(nonzero_vec, nonzero_vec)
def test_corner_contrib_matches_atan2(u, v):
    try:
        n, c, s = ccw_corner_contrib(u, v)
    except ValueError:
        assert cross(u, v) == 0
        return
    ang = math.atan2(float(cross(u, v)), float(sum(a * b for a, b in zip(u, v))))
    if ang <= 0:
        ang += 2 * math.pi
    frac = math.atan2(float(s), float(c))
    assert abs(n * math.pi + frac - ang) < 1e-9


@given(st.lists(st.tuples(nonzero_vec, nonzero_vec), min_size=1, max_size=5))
def test_anglepos_accumulation_matches_float(pairs):
    pos = AnglePos.zero()
    total = 0.0
    for u, v in pairs:
        if cross(u, v) == 0 and sum(a * b for a, b in zip(u, v)) > 0:
            continue
        n, c, s = ccw_corner_contrib(u, v)
        total += math.atan2(float(s), float(c)) + n * math.pi
        pos = pos.add_contrib(c, s)
        pos = AnglePos(pos.n + n, pos.c, pos.s)
    assert abs(pos.approx() - total) < 1e-9


@given(nonzero_vec, nonzero_vec)
def test_anglepos_sub_cmp(u, v):
    a = AnglePos.from_pair(0, *u) if u[1] >= 0 else AnglePos.from_pair(0, -u[0], -u[1])
    b = AnglePos.from_pair(0, *v) if v[1] >= 0 else AnglePos.from_pair(0, -v[0], -v[1])
    d = a.sub(b)
    assert abs((a.approx() - b.approx()) - d.approx()) < 1e-9
    assert a.cmp(b) == -b.cmp(a)


def test_seg_intersection_cases():
    z, o = F(0), F(1)
    assert seg_seg_intersection((z, z), (o, o), (z, o), (o, z)) == \
        ("point", (F(1, 2), F(1, 2)))
    assert seg_seg_intersection((z, z), (o, z), (F(2), z), (F(3), z)) is None
    kind, a, b = seg_seg_intersection((z, z), (F(2), z), (o, z), (F(3), z))
    assert kind == "overlap" and a == (o, z) and b == (F(2), z)
    assert seg_seg_intersection((z, z), (o, z), (o, z), (o, o)) == ("point", (o, z))


def test_point_in_polygon_lshape():
    L = [(F(0), F(0)), (F(2), F(0)), (F(2), F(1)), (F(1), F(1)),
         (F(1), F(2)), (F(0), F(2))]
    assert point_in_polygon((F(1, 2), F(1, 2)), L) == 1
    assert point_in_polygon((F(3, 2), F(3, 2)), L) == -1
    assert point_in_polygon((F(1), F(1)), L) == 0
    assert point_in_polygon((F(1), F(3, 2)), L) == 0
    assert point_in_polygon((F(1, 2), F(1)), L) == 1


def test_primitive_direction():
    assert primitive_direction((F(4), F(-6))) == (F(2), F(-3))
    assert primitive_direction((F(-1, 3), F(0))) == (F(1), F(0))
    assert primitive_direction((F(0), F(-5))) == (F(0), F(1))


def test_sqrtsum_exact():
    a = SqrtSum.length_of([F(2), F(2)])          # 2*sqrt(2)
    b = SqrtSum.sqrt(F(8))                       # 2*sqrt(2)
    assert a == b and a.cmp(b) == 0
    c = SqrtSum.sqrt(F(2)) + SqrtSum.sqrt(F(3))
    d = SqrtSum.sqrt(F(10))
    assert c.cmp(d) < 0  # sqrt2+sqrt3 ~ 3.146 < sqrt10 ~ 3.162
    assert SqrtSum.sqrt(F(9, 4)).terms == {1: F(3, 2)}


@given(st.lists(st.integers(0, 30), min_size=0, max_size=6),
       st.lists(st.integers(0, 30), min_size=0, max_size=6))
def test_sqrtsum_cmp_matches_float(xs, ys):
    a, b = SqrtSum.length_of(map(F, xs)), SqrtSum.length_of(map(F, ys))
    fa = sum(math.sqrt(x) for x in xs)
    fb = sum(math.sqrt(y) for y in ys)
    if abs(fa - fb) > 1e-9:
        assert a.cmp(b) == (1 if fa > fb else -1)
    else:
        assert a.cmp(b) == 0
