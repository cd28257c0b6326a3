"""Search for the small prime-order curves used by the exhaustive checks.

The toy registry entries are the first hits of this search: for a field
prime p and coefficient a, b runs upward from 1 until y^2 = x^3 + ax + b is
non-singular with a prime number of points. The generator is the point with
the smallest abscissa, taking the smaller of its two ordinates.
"""
import logging

from ecsteg_shared.arith.field import FieldElement, is_probable_prime, is_square, sqrt

from .curve import CurveParams, curve_points

logger = logging.getLogger(__name__)


class NoPrimeOrderCurveError(ValueError):
    pass


def find_prime_order_curve(p, a, name="toy"):
    """(b, order) of the first prime-order curve y^2 = x^3 + ax + b, b >= 1."""
    for b in range(1, p):
        try:
            curve = CurveParams(name, p, a, b)
        except ValueError:
            continue
        order = len(curve_points(curve))
        if is_probable_prime(order):
            logger.debug("%s: b = %d gives %d points", name, b, order)
            return b, order
    raise NoPrimeOrderCurveError(
        "No b gives a prime-order curve for p = {}, a = {}".format(p, a)
    )


def first_generator(curve):
    for x in range(curve.p.value):
        rhs = curve.rhs(FieldElement(x, curve.p))
        if rhs.residue != 0 and is_square(rhs):
            y = sqrt(rhs).residue
            return x, min(y, curve.p.value - y)
    raise NoPrimeOrderCurveError("{} has no affine point".format(curve.name))


def toy_definition(p, a, name="toy"):
    """(p, a, b, (gx, gy), q) in the layout of the curve registry."""
    b, order = find_prime_order_curve(p, a, name=name)
    generator = first_generator(CurveParams(name, p, a, b))
    return p, a, b, generator, order
