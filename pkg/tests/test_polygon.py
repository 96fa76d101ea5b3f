from fractions import Fraction as Fr

import pytest

from okbodies import Polygon


def test_area_and_orientation():
    tri = Polygon([(0, 0), (1, 0), (0, 1)])
    assert tri.area() == Fr(1, 2)
    with pytest.raises(ValueError):
        Polygon([(0, 0), (0, 1), (1, 0)])  # clockwise


def test_collinear_and_duplicate_cleanup():
    p = Polygon([(0, 0), (Fr(1, 2), 0), (1, 0), (1, 0), (0, 1), (0, Fr(1, 2))])
    assert p.vertices == ((0, 0), (1, 0), (0, 1))


def test_degenerate_segment_and_point():
    seg = Polygon([(0, 0), (1, 1), (2, 2)])
    assert seg.is_degenerate() and seg.area() == 0
    assert seg.contains_point((Fr(1, 2), Fr(1, 2)))
    assert not seg.contains_point((1, 0))
    pt = Polygon([(3, 4)])
    assert pt.contains_point((3, 4)) and not pt.contains_point((3, 5))


def test_containment():
    outer = Polygon([(0, 0), (2, 0), (0, 2)])
    inner = Polygon([(0, 0), (1, 0), (0, 1)])
    assert outer.contains_polygon(inner)
    assert not inner.contains_polygon(outer)
    assert outer.contains_point((1, 1))  # on the hypotenuse (closed body)
    assert not outer.contains_point((Fr(3, 2), 1))


def test_same_shape_rotation():
    a = Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    b = Polygon([(1, 0), (1, 1), (0, 1), (0, 0)])
    assert a.same_shape(b)


def test_edge_lines_primitive():
    tri = Polygon([(0, 0), (Fr(1, 25), 0), (0, 1)])
    lines = set(tri.edge_lines())
    assert (0, -1, 0) in lines           # y >= 0
    assert (-1, 0, 0) in lines           # x >= 0
    assert (25, 1, 1) in lines           # 25x + y <= 1
    assert len(lines) == 3


def test_json_roundtrip():
    tri = Polygon([(0, 0), (Fr(1, 25), 0), (0, 1)])
    assert Polygon.from_json(tri.to_json()) == tri
