"""Affine short-Weierstrass group law y^2 = x^3 + ax + b over F_p."""
import logging

from ecsteg_shared.arith.field import FieldElement, Prime, is_square, sqrt

logger = logging.getLogger(__name__)

_TAG_INFINITY = 0x00
_TAG_UNCOMPRESSED = 0x04


class CurveMismatchError(ValueError):
    pass


class PointDecodingError(ValueError):
    pass


class CurveParams(object):
    def __init__(self, name, p, a, b, generator=None, order=None):
        self._name = name
        self._p = p if isinstance(p, Prime) else Prime(p)
        self._a = FieldElement(a, self._p)
        self._b = FieldElement(b, self._p)
        if (4 * self._a ** 3 + 27 * self._b ** 2) == 0:
            raise ValueError("Curve {} is singular".format(name))

        self._q = None
        self._g = None
        if order is not None:
            self._q = order if isinstance(order, Prime) else Prime(order)
        if generator is not None:
            gx, gy = generator
            self._g = CurvePoint(self, gx, gy)
            if self._q is not None and not scalar_mul(self._q.value, self._g).is_infinity:
                raise ValueError(
                    "Generator of {} does not have order {}".format(name, self._q.value)
                )

    @property
    def name(self):
        return self._name

    @property
    def p(self):
        return self._p

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def g(self):
        return self._g

    @property
    def q(self):
        return self._q

    @property
    def congruence_tags(self):
        return {"p mod 3": self._p.value % 3, "p mod 4": self._p.value % 4}

    @property
    def infinity(self):
        return CurvePoint(self)

    def rhs(self, x):
        """g(x) = x^3 + ax + b."""
        return x * x * x + self._a * x + self._b

    def lift_x(self, x, odd):
        """The point with abscissa x whose ordinate has the given parity, or None."""
        x = FieldElement(x, self._p)
        y = sqrt(self.rhs(x))
        if y is None:
            return None
        if y.residue & 1 != odd:
            y = -y
        return CurvePoint(self, x, y)

    def _key(self):
        return (self._p.value, self._a.residue, self._b.residue)

    def __eq__(self, other):
        if not isinstance(other, CurveParams):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "CurveParams({})".format(self._name)


class CurvePoint(object):
    """A finite affine point, or the point at infinity when x and y are None."""

    __slots__ = ("_curve", "_x", "_y")

    def __init__(self, curve, x=None, y=None, check=True):
        self._curve = curve
        if x is None or y is None:
            self._x = self._y = None
            return
        self._x = FieldElement(x, curve.p)
        self._y = FieldElement(y, curve.p)
        if check and not on_curve(self):
            raise ValueError(
                "({}, {}) is not on {}".format(self._x.residue, self._y.residue, curve.name)
            )

    @property
    def curve(self):
        return self._curve

    @property
    def x(self):
        return self._x

    @property
    def y(self):
        return self._y

    @property
    def is_infinity(self):
        return self._x is None

    def __add__(self, other):
        return point_add(self, other)

    def __neg__(self):
        return point_neg(self)

    def __sub__(self, other):
        return point_add(self, point_neg(other))

    def __rmul__(self, scalar):
        return scalar_mul(scalar, self)

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return (
            self._curve == other._curve and self._x == other._x and self._y == other._y
        )

    def __hash__(self):
        if self.is_infinity:
            return hash(("infinity", hash(self._curve)))
        return hash((self._x.residue, self._y.residue, hash(self._curve)))

    def __repr__(self):
        if self.is_infinity:
            return "CurvePoint(infinity on {})".format(self._curve.name)
        return "CurvePoint({}, {} on {})".format(
            self._x.residue, self._y.residue, self._curve.name
        )


def _check_same_curve(P, Q):
    if P.curve != Q.curve:
        raise CurveMismatchError(
            "Points on {} and {} cannot be combined".format(P.curve.name, Q.curve.name)
        )


def on_curve(P):
    if P.is_infinity:
        return True
    return P.y * P.y == P.curve.rhs(P.x)


def point_neg(P):
    if P.is_infinity:
        return P
    return CurvePoint(P.curve, P.x, -P.y, check=False)


def point_double(P):
    if P.is_infinity or P.y.residue == 0:
        return P.curve.infinity
    slope = (3 * P.x * P.x + P.curve.a) / (2 * P.y)
    x = slope * slope - 2 * P.x
    y = slope * (P.x - x) - P.y
    return CurvePoint(P.curve, x, y, check=False)


def point_add(P, Q):
    _check_same_curve(P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y == Q.y:
            return point_double(P)
        return P.curve.infinity
    slope = (Q.y - P.y) / (Q.x - P.x)
    x = slope * slope - P.x - Q.x
    y = slope * (P.x - x) - P.y
    return CurvePoint(P.curve, x, y, check=False)


def scalar_mul(n, P):
    """Left-to-right double-and-add; negative scalars multiply -P."""
    if n < 0:
        return scalar_mul(-n, point_neg(P))
    result = P.curve.infinity
    for bit in bin(n)[2:]:
        result = point_double(result)
        if bit == "1":
            result = point_add(result, P)
    return result


def serialize_point(P):
    if P.is_infinity:
        return bytes([_TAG_INFINITY])
    return bytes([_TAG_UNCOMPRESSED]) + P.x.to_bytes() + P.y.to_bytes()


def deserialize_point(data, curve):
    data = bytes(data)
    if data == bytes([_TAG_INFINITY]):
        return curve.infinity
    width = curve.p.byte_length
    if len(data) != 1 + 2 * width or data[0] != _TAG_UNCOMPRESSED:
        raise PointDecodingError(
            "Malformed point encoding of {} bytes for {}".format(len(data), curve.name)
        )
    try:
        x = FieldElement.from_bytes(data[1 : 1 + width], curve.p)
        y = FieldElement.from_bytes(data[1 + width :], curve.p)
    except ValueError as err:
        raise PointDecodingError(str(err))
    point = CurvePoint(curve, x, y, check=False)
    if not on_curve(point):
        raise PointDecodingError("Decoded point is not on {}".format(curve.name))
    return point


def curve_points(curve):
    """Every point of a small curve, infinity first, by scanning all abscissas."""
    p = curve.p.value
    if p > 1 << 16:
        raise ValueError("Refusing to enumerate a curve over a {}-bit field".format(p.bit_length()))
    points = [curve.infinity]
    for x in range(p):
        rhs = curve.rhs(FieldElement(x, curve.p))
        if rhs.residue == 0:
            points.append(CurvePoint(curve, x, 0, check=False))
        elif is_square(rhs):
            y = sqrt(rhs)
            points.append(CurvePoint(curve, x, y, check=False))
            points.append(CurvePoint(curve, x, -y, check=False))
    return points
