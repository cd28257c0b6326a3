import functools
import logging

from ecsteg_shared.arith.field import is_odd, is_square, sqrt

from .base import Encoding, PreimageSlots

logger = logging.getLogger(__name__)


class SWUEncoding(Encoding):
    """Simplified SWU map for a, b != 0 and p = 3 mod 4."""

    name = "swu"

    def __init__(self, curve):
        super().__init__(curve)
        self._minus_b_over_a = -curve.b / curve.a
        self._half = 1 / curve.p.element(2)

    @classmethod
    def not_applicable_reason(cls, curve):
        if curve.a.residue == 0 or curve.b.residue == 0:
            return "SWU needs a != 0 and b != 0"
        if curve.p.value % 4 != 3:
            return "p mod 4 = {}, SWU needs p = 3 mod 4".format(curve.p.value % 4)
        return None

    def _x1(self, w):
        return self._minus_b_over_a * (1 + 1 / (w * w - w))

    @staticmethod
    def _is_degenerate(w):
        return (w * w - w).residue == 0

    def forward(self, t):
        curve = self._curve
        w = t * t
        if self._is_degenerate(w):
            return curve.infinity
        odd = is_odd(t)
        x1 = self._x1(w)
        for abscissa in (x1, -w * x1):
            point = curve.lift_x(abscissa, odd)
            if point is not None:
                return point
        logger.warning("No square among the SWU abscissas for t = %d", t.residue)
        return curve.infinity

    def _quadratic_roots(self, linear, constant):
        """Roots of w^2 - linear*w + constant, smaller discriminant branch first."""
        root = sqrt(linear * linear - 4 * constant)
        if root is None:
            return [None, None]
        return [(linear - root) * self._half, (linear + root) * self._half]

    def _squares(self, point):
        curve = self._curve
        x = point.x
        candidates = [None, None]

        denominator = curve.a * x + curve.b
        if denominator.residue != 0:
            # w^2 - w + b/(ax + b) = 0
            candidates = self._quadratic_roots(curve.p.one, curve.b / denominator)

        # w^2 - (1 + k)w + (1 + k) = 0 with k = ax/b
        k_plus_one = curve.a * x / curve.b + 1
        second = self._quadratic_roots(k_plus_one, k_plus_one)
        for index, w in enumerate(second):
            if w is None or self._is_degenerate(w):
                second[index] = None
            elif is_square(curve.rhs(self._x1(w))):
                second[index] = None
        return candidates + second

    def inverse(self, point, rng=None):
        if point.is_infinity:
            return PreimageSlots.empty()
        odd = is_odd(point.y)
        candidates = []
        for w in self._squares(point):
            u = None if w is None or w.residue == 0 else sqrt(w)
            if u is not None and is_odd(u) != odd:
                u = -u
            candidates.append(u)
        return self._verified_slots(point, candidates)


@functools.lru_cache(maxsize=None)
def _encoding(curve):
    return SWUEncoding(curve)


def swu_forward(t, curve):
    return _encoding(curve).forward(t)


def swu_inverse(point, curve, rng=None):
    return _encoding(curve).inverse(point, rng)
