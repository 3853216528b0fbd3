from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from squareheron.exact import DomainError
from squareheron.triangle import (
    IntTriangle,
    RationalTriangle,
    classify,
    heron_sixteen_area_sq,
    normalize_preserving_squares,
)

from _oracles import euclid, semiperimeter_area


def test_sixteen_area_sq_examples():
    assert heron_sixteen_area_sq(3, 4, 5) == 576
    # 80 * 48 * 30 * 2
    assert heron_sixteen_area_sq(16, 25, 39) == 230400
    assert heron_sixteen_area_sq(289, 784, 975) == 16 * 94080**2


def test_sixteen_area_sq_rejects_nonpositive():
    with pytest.raises(DomainError):
        heron_sixteen_area_sq(0, 1, 1)


def test_classify_all_square_triangle():
    a, b, c = 1853**2, 4380**2, 4427**2
    cl = classify(a, b, c)
    assert cl.heron and cl.primitive and cl.square_sides == 3
    assert cl.area == semiperimeter_area(a, b, c)


def test_classify_example_24():
    cl = classify(111**2, 433**2, 197200)
    assert cl.heron and cl.primitive and cl.square_sides == 2
    assert cl.square_mask == (True, True, False)


def test_classify_degenerate():
    cl = classify(1, 2, 3)
    assert cl.degenerate and not cl.heron and cl.area is None


def test_classify_non_heron():
    cl = classify(2, 3, 4)
    assert not cl.heron and not cl.degenerate


def test_normalize_example_24():
    t = RationalTriangle(1, Fraction(433, 111) ** 2, Fraction(197200, 111**2))
    assert normalize_preserving_squares(t, (0, 1)).sides == (111**2, 433**2, 197200)


def test_normalize_isosceles():
    t = normalize_preserving_squares(RationalTriangle(1, 1, Fraction(8, 5)), (0, 1))
    assert t.sides == (25, 25, 40)
    assert t.area == 300 == semiperimeter_area(25, 25, 40)


def test_normalize_identity_on_integral():
    assert normalize_preserving_squares(RationalTriangle(3, 4, 5)).sides == (3, 4, 5)


def test_normalize_boolean_mask():
    t = RationalTriangle(1, 1, Fraction(8, 5))
    assert normalize_preserving_squares(t, (True, True, False)).sides == (25, 25, 40)


def test_normalize_rejects_impossible_mask():
    with pytest.raises(DomainError):
        normalize_preserving_squares(RationalTriangle(3, 4, 5), (0,))


def test_normalize_keeps_non_square_common_factor():
    # gcd 13 is not square, so it must stay and the triangle is not primitive.
    t = normalize_preserving_squares(RationalTriangle(65**2, 52**2, 1599), (0, 1))
    assert t.sides == (65**2, 52**2, 1599)
    assert not t.primitive


def test_rational_triangle_rejects_degenerate():
    with pytest.raises(DomainError):
        RationalTriangle(1, 2, 3)


def test_int_triangle_invariants():
    t = IntTriangle.from_sides(25, 25, 48)
    assert 16 * t.area**2 == heron_sixteen_area_sq(25, 25, 48)
    assert t.square_mask == (True, True, False)
    assert t.to_record() == {"a": 25, "b": 25, "c": 48, "area": 168, "primitive": True, "square_sides": [0, 1]}


HERONS = [(3, 4, 5), (5, 5, 6), (13, 14, 15), (16, 25, 39), (25, 25, 14), (111**2, 433**2, 197200)]


@given(st.sampled_from(HERONS), st.integers(1, 60))
def test_scale_covariance(tri, s):
    base = classify(*tri)
    scaled = classify(*(s * x for x in tri))
    assert scaled.heron and scaled.area == s * s * base.area
    sq = classify(*(s * s * x for x in tri))
    assert sq.square_sides >= base.square_sides
    assert sq.area == s**4 * base.area


@given(
    st.sampled_from(HERONS),
    st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50),
)
def test_normalize_properties(tri, lam):
    # Scaling by a rational square must normalize back to the same triangle.
    mask = [i for i, x in enumerate(tri) if classify(*tri).square_mask[i]]
    t = RationalTriangle(*(lam * lam * x for x in tri))
    out = normalize_preserving_squares(t, mask)
    for i in mask:
        assert out.square_mask[i]
    g = euclid(euclid(out.a, out.b), out.c)
    assert not any(g % (d * d) == 0 for d in range(2, g + 1) if d * d <= g)
    again = normalize_preserving_squares(RationalTriangle(*out.sides), mask)
    assert again == out
    ref = normalize_preserving_squares(RationalTriangle(*tri), mask)
    assert out == ref
