import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecsteg_shared.curves import (
    CurveMismatchError,
    CurveParams,
    CurvePoint,
    PointDecodingError,
    curve_points,
    deserialize_point,
    on_curve,
    point_add,
    point_double,
    point_neg,
    registry_get,
    scalar_mul,
    serialize_point,
)

TOY_1019 = registry_get("toy-1019")
scalars = st.integers(min_value=0, max_value=1032)


def test_singular_curve_is_rejected():
    with pytest.raises(ValueError):
        CurveParams("singular", 11, 0, 0)


def test_point_must_be_on_curve(small_curve):
    with pytest.raises(ValueError):
        CurvePoint(small_curve, 3, 4)


def test_doubling_example(small_curve):
    point = CurvePoint(small_curve, 3, 5)
    doubled = point_double(point)
    assert (doubled.x, doubled.y) == (10, 0)
    assert on_curve(doubled)
    assert point_add(point, point) == doubled


def test_identity_and_inverse(small_curve):
    point = CurvePoint(small_curve, 3, 5)
    assert point + small_curve.infinity == point
    assert small_curve.infinity + point == point
    assert (point + point_neg(point)).is_infinity
    assert point_double(small_curve.infinity).is_infinity


def test_small_curve_group_order(small_curve):
    points = curve_points(small_curve)
    assert len(points) == 13
    assert points[0].is_infinity
    assert all(on_curve(point) for point in points)
    for point in points:
        assert scalar_mul(13, point).is_infinity


def test_scalar_mul_edge_cases():
    g = TOY_1019.g
    assert scalar_mul(0, g).is_infinity
    assert scalar_mul(1, g) == g
    assert scalar_mul(TOY_1019.q.value, g).is_infinity
    assert scalar_mul(-5, g) == point_neg(scalar_mul(5, g))
    assert 3 * g == g + g + g


def test_points_on_different_curves_do_not_mix(small_curve):
    with pytest.raises(CurveMismatchError):
        point_add(CurvePoint(small_curve, 3, 5), TOY_1019.g)


def test_serialize_infinity():
    assert serialize_point(TOY_1019.infinity) == b"\x00"
    assert deserialize_point(b"\x00", TOY_1019).is_infinity


def test_serialization_round_trip_on_random_multiples():
    generator = random.Random(11)
    for curve in (TOY_1019, registry_get("p256")):
        for _ in range(20):
            point = generator.randrange(curve.q.value) * curve.g
            assert deserialize_point(serialize_point(point), curve) == point


def test_deserialize_rejects_tampered_points():
    data = bytearray(serialize_point(5 * TOY_1019.g))
    data[-1] ^= 1
    with pytest.raises(PointDecodingError):
        deserialize_point(bytes(data), TOY_1019)
    with pytest.raises(PointDecodingError):
        deserialize_point(b"\x04\x00", TOY_1019)
    with pytest.raises(PointDecodingError):
        deserialize_point(b"\x05" + bytes(serialize_point(TOY_1019.g)[1:]), TOY_1019)


def test_lift_x_chooses_parity():
    odd = TOY_1019.lift_x(0, 1)
    even = TOY_1019.lift_x(0, 0)
    assert odd.y.residue % 2 == 1
    assert even.y.residue % 2 == 0
    assert odd == point_neg(even)


def test_curve_points_refuses_large_fields():
    with pytest.raises(ValueError):
        curve_points(registry_get("p256"))


@pytest.mark.parametrize("name", ["toy-1019", "toy-1039"])
def test_toy_curves_have_prime_order_and_respect_hasse(name):
    curve = registry_get(name)
    order = len(curve_points(curve))
    assert order == curve.q.value
    assert abs(order - (curve.p.value + 1)) <= 2 * math.sqrt(curve.p.value)


@settings(max_examples=50, deadline=None)
@given(scalars, scalars, scalars)
def test_group_axioms(a, b, c):
    g = TOY_1019.g
    p, q, r = a * g, b * g, c * g
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (a + b) * g == p + q


@settings(max_examples=25, deadline=None)
@given(scalars, scalars)
def test_scalar_mul_is_distributive(a, b):
    assert scalar_mul(a * b, TOY_1019.g) == scalar_mul(a, scalar_mul(b, TOY_1019.g))
